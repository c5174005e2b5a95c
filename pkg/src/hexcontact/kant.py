"""Alternative backend: draw the dual 3-regular graph face by face.

``augment_xyz`` wraps a triangulation in three outer-face vertices x, y,
z so that the regions the construction cannot keep convex land on
removable dummies.  The dual H of the augmented graph is 3-regular; its
vertices are the faces of the augmented graph, and the region of a graph
vertex c is the cycle of faces around c.

``kant_draw`` adds those regions in reverse canonical order.  The first
region (for x) is a triangle: apex at the bottom, two equal sides, and a
horizontal path across the top.  Every later region is completed above
the current terrain either by a single vertex or by a horizontal path
whose end segments take the two non-horizontal slopes.  Work happens in
the symmetric slope basis {0, +1, -1}, where the attach rays from the
two ends of a region's drawn fan always converge; a shear to
((x - y)/2, y) lands the result on the rectilinear kant grid with slopes
{0, 90, -45} degrees.

Horizontal spacing is pre-reserved: a pass over the canonical order
assigns every vertex the width its own future completion needs (the sum
over its interval interiors plus a fixed allowance), and each new path
hands every interior owner its reserved edge length.  The reserve
algebra guarantees each completion fits strictly inside its fan, so no
coordinate is ever shifted after placement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canonical import canonical_order
from .graph import EmbeddedGraph, GraphError, dual, faces, validate
from .hexlayout import HexLayout, collapse_polygon
from .prepare import AugmentationRecord, strip, triangulate

Point = tuple[int, int]


def _enclose(rotation: list[list[int]], outer: tuple[int, ...], nu: int) -> tuple[int, ...]:
    """Add vertex ``nu`` adjacent to the outer triangle, hiding outer[0]."""
    p, q, r = outer
    rotation.append([q, p, r])
    rotation[p].insert(rotation[p].index(r) + 1, nu)
    rotation[q].insert(rotation[q].index(p) + 1, nu)
    rotation[r].insert(rotation[r].index(q) + 1, nu)
    return (nu, q, r)


def augment_xyz(g: EmbeddedGraph) -> tuple[EmbeddedGraph, AugmentationRecord]:
    """Add x, y, z in the outer face; the outer face becomes {x, y, z}.

    x is joined to all three outer vertices (b, c stay outer), then y to
    x, b, c (b stays outer), then z to x, y, b.  The result is fully
    triangulated on n+3 vertices with 2n+2 faces.
    """
    validate(g).raise_if_failed()
    if g.n < 3 or g.m != 3 * g.n - 6:
        raise GraphError("augment_xyz needs a fully triangulated graph")
    if len(g.outer_face) != 3:
        raise GraphError("augment_xyz needs a triangular outer face")
    a, b, c = g.outer_face
    n = g.n
    x, y, z = n, n + 1, n + 2
    rotation = [list(r) for r in g.rotation]
    outer = _enclose(rotation, (a, b, c), x)      # -> (x, b, c)
    outer = _enclose(rotation, (outer[2], outer[0], outer[1]), y)  # hide c -> (y, x, b)
    outer = _enclose(rotation, (outer[2], outer[0], outer[1]), z)  # hide b -> (z, y, x)
    rec = AugmentationRecord(n, {x, y, z})
    for v in (a, b, c):
        rec.add_edge(x, v)
    for v in (x, b, c):
        rec.add_edge(y, v)
    for v in (x, y, b):
        rec.add_edge(z, v)
    gp = EmbeddedGraph(n + 3, rotation, outer)
    validate(gp).raise_if_failed()
    if gp.m != 3 * gp.n - 6:
        raise GraphError("augment_xyz did not produce a triangulation")
    return gp, rec


@dataclass
class KantDrawing:
    """Positions of the dual's vertices plus the face->region map."""

    positions: dict[int, Point]           # H vertex (= face of gp) -> point
    regions: dict[int, list[Point]]       # gp vertex -> convex polygon
    grid: tuple[int, int]
    mode: str = "kant-rectilinear"
    h_nodes: int = 0
    bent_edge: tuple[int, int] = (-1, -1)  # the one H edge never drawn

    apex_face: int = -1


def kant_draw(gp: EmbeddedGraph) -> KantDrawing:
    """Draw dual regions for every vertex of gp except the outer pair y, z.

    ``gp`` must come from augment_xyz, outer face traversal (z, y, x).
    """
    validate(gp).raise_if_failed()
    z, y, x = gp.outer_face
    order = canonical_order(gp, (y, z, x))
    ordv, intervals = order.order, order.intervals
    f = gp.n

    face_list = faces(gp)
    h = dual(gp)
    if h.n != len(face_list) or any(len(r) != 3 for r in h.rotation):
        raise GraphError("dual of the augmented graph is not 3-regular")
    fid: dict[tuple[int, int, int], int] = {}
    for i, fc in enumerate(face_list):
        fid[tuple(sorted(fc.vertices))] = i

    def face_of(a: int, b: int, c: int) -> int:
        try:
            return fid[tuple(sorted((a, b, c)))]
        except KeyError:
            raise GraphError(f"triangle {a},{b},{c} is not a face") from None

    apex = face_of(x, y, z)

    # width reserves, forward over the canonical order
    reserve = [2] * f
    for i in range(2, f):
        iv = intervals[i]
        if iv and len(iv) > 2:
            reserve[ordv[i]] = sum(reserve[p] for p in iv[1:-1]) + 2

    fpos: dict[int, Point] = {}
    tnext: dict[int, int] = {}
    fan_first: dict[int, int] = {}
    fan_last: dict[int, int] = {}
    regions: dict[int, list[Point]] = {}

    # initial triangular region for x
    iv = intervals[f - 1]
    assert iv is not None and iv[0] == y and iv[-1] == z
    m = len(iv) - 1
    npaths = [face_of(iv[j], iv[j + 1], x) for j in range(m)]
    spac = [reserve[iv[j]] for j in range(1, m)]
    w0 = sum(spac)
    y0 = w0 // 2
    fpos[apex] = (0, 0)
    cx = -y0
    pts = []
    for j, nf in enumerate(npaths):
        fpos[nf] = (cx, y0)
        pts.append((cx, y0))
        if j < m - 1:
            cx += spac[j]
    if pts[-1] != (y0, y0):
        raise GraphError("initial triangle legs are unbalanced")
    for u, v in zip(npaths, npaths[1:]):
        tnext[u] = v
    fan_first[y] = fan_last[y] = npaths[0]
    fan_first[z] = fan_last[z] = npaths[-1]
    for j in range(1, m):
        fan_first[iv[j]] = npaths[j - 1]
        fan_last[iv[j]] = npaths[j]
    regions[x] = collapse_polygon([(0, 0)] + pts[::-1])

    # add the remaining regions in reverse canonical order
    for i in range(f - 2, 1, -1):
        c = ordv[i]
        iv = intervals[i]
        if iv is None:
            raise GraphError(f"missing interval at canonical position {i}")
        t = len(iv) - 1
        m = t
        tl_f, tr_f = fan_first[c], fan_last[c]
        fan = [tl_f]
        fanpts = [fpos[tl_f]]
        cur = tl_f
        while cur != tr_f:
            cur = tnext[cur]
            fan.append(cur)
            fanpts.append(fpos[cur])
            if len(fan) > len(fpos):
                raise GraphError("terrain walk did not terminate")
        if len(fan) < 2:
            raise GraphError(f"fan of vertex {c} has a single face")
        (xl, yl), (xr, yr) = fanpts[0], fanpts[-1]
        span = xr - xl
        maxfan = max(p[1] for p in fanpts)
        if maxfan != max(yl, yr):
            raise GraphError(f"fan of vertex {c} is not a valley")

        npaths = [face_of(iv[j], iv[j + 1], c) for j in range(m)]
        if m == 1:
            yy = (span + yl + yr) // 2
            if yy <= maxfan:
                raise GraphError(f"apex for vertex {c} does not clear its fan")
            wpt = (xl + (yy - yl), yy)
            if wpt[0] != xr - (yy - yr):
                raise GraphError(f"attach rays for vertex {c} do not meet")
            newpts = [wpt]
        else:
            yy = maxfan + 1
            aa = yy - yl
            bb = yy - yr
            avail = span - aa - bb
            need = sum(reserve[iv[j]] for j in range(1, m))
            if avail < need or (avail - need) % 2:
                raise GraphError(
                    f"width reserve violated at vertex {c}: have {avail}, need {need}"
                )
            spac = [reserve[iv[j]] for j in range(1, m)]
            spac[-1] += avail - need
            newpts = [(xl + aa, yy)]
            for j in range(m - 1):
                px = newpts[-1][0] + spac[j]
                newpts.append((px, yy))
            if newpts[-1][0] != xr - bb:
                raise GraphError(f"path for vertex {c} does not meet its right attach")

        for nf, p in zip(npaths, newpts):
            fpos[nf] = p
        regions[c] = collapse_polygon(fanpts + newpts[::-1])

        # splice the terrain and update fans
        prev = tl_f
        for nf in npaths:
            tnext[prev] = nf
            prev = nf
        tnext[prev] = tr_f
        fan_last[iv[0]] = npaths[0]
        fan_first[iv[t]] = npaths[-1]
        for j in range(1, t):
            fan_first[iv[j]] = npaths[j - 1]
            fan_last[iv[j]] = npaths[j]

    # shear to the rectilinear kant grid: slopes {0, 90, -45} degrees
    def shear(p: Point) -> Point:
        if (p[0] - p[1]) % 2:
            raise GraphError("parity violation before shearing")
        return ((p[0] - p[1]) // 2, p[1])

    positions = {fc: shear(p) for fc, p in fpos.items()}
    regions = {c: [shear(p) for p in poly] for c, poly in regions.items()}
    allpts = [p for poly in regions.values() for p in poly]
    mx = min(p[0] for p in allpts)
    my = min(p[1] for p in allpts)
    positions = {fc: (p[0] - mx, p[1] - my) for fc, p in positions.items()}
    regions = {
        c: [(p[0] - mx, p[1] - my) for p in poly] for c, poly in regions.items()
    }
    allpts = [p for poly in regions.values() for p in poly]
    grid = (max(p[0] for p in allpts), max(p[1] for p in allpts))

    # the bent edge of the classical construction separates the two skipped
    # regions; it crosses the graph edge (z, y) and is never drawn
    tzy = [fc for fc in range(len(face_list)) if {z, y} < set(face_list[fc].vertices)]
    bent = tuple(sorted(tzy)) if len(tzy) == 2 else (-1, -1)
    return KantDrawing(
        positions=positions,
        regions=regions,
        grid=grid,
        h_nodes=h.n,
        bent_edge=bent,  # type: ignore[arg-type]
        apex_face=apex,
    )


def kant_layout(
    g: EmbeddedGraph, *, keep_dummies: bool = False
) -> tuple[HexLayout, AugmentationRecord]:
    """Triangulate, wrap in x/y/z, draw the dual, and strip the dummies.

    The regions for x, y, z are removed outright (y and z are never
    drawn; x's initial triangle would dominate the bounding box), so the
    realization of g fits the rectilinear kant grid.
    """
    validate(g).raise_if_failed()
    tri, rec = triangulate(g)
    gp, _ = augment_xyz(tri)
    kd = kant_draw(gp)
    polygons = {v: kd.regions[v] for v in range(tri.n)}
    lay = HexLayout(polygons=polygons, holes=[], grid=kd.grid, mode="kant-rectilinear")
    if not keep_dummies:
        lay = strip(lay, rec)
    return _renormalize(lay), rec


def _renormalize(lay: HexLayout) -> HexLayout:
    pts = [p for poly in lay.polygons.values() for p in poly]
    pts += [p for poly in lay.holes for p in poly]
    if not pts:
        return lay
    mx = min(p[0] for p in pts)
    my = min(p[1] for p in pts)
    polygons = {
        v: [(p[0] - mx, p[1] - my) for p in poly] for v, poly in lay.polygons.items()
    }
    holes = [[(p[0] - mx, p[1] - my) for p in poly] for poly in lay.holes]
    pts = [p for poly in polygons.values() for p in poly] + [
        p for poly in holes for p in poly
    ]
    grid = (max(p[0] for p in pts), max(p[1] for p in pts))
    return HexLayout(polygons=polygons, holes=holes, grid=grid, mode=lay.mode)
