"""Exact-geometry carving oracle with dyadic coordinates.

Runs the same incremental carving as :mod:`hexcontact.carve` but fully
geometrically, inside the triangle (0,0), (-1,1), (1,1) scaled by 2^n so
every coordinate is an integer (the step-i cut line sits at height
1 - 2^-i).  Regions are kept as explicit corner chains; cut points come
from intersecting boundary lines with the cut row.  The resulting
polygons tile the scaled triangle exactly.

``extract_tree`` rebuilds a capped binary tree purely from the polygon
geometry - split all sides into atomic segments, drop the horizontal
ones, read parent/child from the row order - which makes the oracle an
independent check of the combinatorial carve: the two trees must agree
node-for-node under inorder relabeling.

Coordinate magnitudes grow as 2^n, so this is for small inputs only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canonical import CanonicalOrder
from .graph import EmbeddedGraph, GraphError
from .tree import CappedBinaryTree

Point = tuple[int, int]

EXACT_SIZE_CAP = 200


@dataclass
class _Region:
    vertex: int
    # corner chains, bottom-first; left[0] is the bottom-left corner and
    # right[0] the bottom-right (equal for a degree-2 apex)
    left: list[Point]
    right: list[Point]
    # provisional sides: topmost anchor point and slope of the line that
    # currently runs from it up to the active front
    la: Point = (0, 0)
    ls: int = -1
    ra: Point = (0, 0)
    rs: int = +1
    poly: list[Point] | None = None  # set when closed


@dataclass
class DyadicDrawing:
    """Exact region polygons inside the scaled initial triangle."""

    scale: int  # all coordinates are multiples of value * scale
    polygons: dict[int, list[Point]]
    grid: tuple[int, int] = (0, 0)
    mode: str = "standard"
    holes: list[list[Point]] = field(default_factory=list)

    @property
    def outer(self) -> list[Point]:
        s = self.scale
        return [(0, 0), (s, s), (-s, s)]


def _on_line_at(anchor: Point, slope: int, y: int) -> Point:
    x0, y0 = anchor
    return (x0 + slope * (y - y0), y)


def carve_exact(g: EmbeddedGraph, ord: CanonicalOrder) -> DyadicDrawing:
    """Geometric simulation of the carving; n is capped to keep coordinates sane."""
    n = g.n
    if n < 3:
        raise GraphError("carving needs a triangulation on at least 3 vertices")
    if n > EXACT_SIZE_CAP:
        raise GraphError(f"carve_exact is limited to n <= {EXACT_SIZE_CAP}")
    order, intervals = ord.order, ord.intervals
    S = 1 << n
    top = S

    regions: dict[int, _Region] = {}
    front: list[int] = []  # vertices left to right

    v0, v1 = order[0], order[1]
    rt: Point = (0, 0)
    regions[v0] = _Region(v0, left=[rt], right=[rt], la=rt, ls=-1, ra=rt, rs=+1)
    front.append(v0)

    # step 1: apex on R_0's right side at depth 1/2
    y1 = top - (S >> 1)
    apex1 = _on_line_at(rt, +1, y1)
    r0 = regions[v0]
    r0.right.append(apex1)
    r0.ra, r0.rs = apex1, -1
    regions[v1] = _Region(v1, left=[apex1], right=[apex1], la=apex1, ls=-1, ra=apex1, rs=+1)
    front.append(v1)

    for i in range(2, n):
        vi = order[i]
        iv = intervals[i]
        if iv is None:
            raise GraphError(f"missing interval at step {i}")
        p = list(iv)
        t = len(p) - 1
        k0 = front.index(p[0])
        if front[k0:k0 + t + 1] != p:
            raise GraphError(f"interval at step {i} is not consecutive on the front")
        y = top - (S >> i)

        ra_reg = regions[p[0]]
        cut_a = ra_reg.rs > 0
        nl = _on_line_at(ra_reg.ra, ra_reg.rs, y)
        if cut_a:
            ra_reg.right.append(nl)  # corner carved off R_a
        ra_reg.ra, ra_reg.rs = nl, -1

        if t == 1:
            nr = nl
            rb_reg = regions[p[1]]
            if not cut_a:
                rb_reg.left.append(nl)  # the apex carves R_b instead
            rb_reg.la, rb_reg.ls = nl, +1
        else:
            bpts = [nl]
            for j in range(1, t - 1):
                mid = regions[p[j]]
                bpts.append(_on_line_at(mid.ra, mid.rs, y))
            rb_reg = regions[p[t]]
            nr = _on_line_at(rb_reg.la, rb_reg.ls, y)
            bpts.append(nr)
            if rb_reg.ls < 0:
                rb_reg.left.append(nr)  # corner carved off R_b
            rb_reg.la, rb_reg.ls = nr, +1
            for j in range(1, t):
                _close(regions[p[j]], bpts[j - 1], bpts[j])

        regions[vi] = _Region(vi, left=[nl], right=[nr], la=nl, ls=-1, ra=nr, rs=+1)
        front[k0 + 1: k0 + t] = [vi]

    # close the surviving regions at the top side
    for v in front:
        reg = regions[v]
        tl_pt = _on_line_at(reg.la, reg.ls, top)
        tr_pt = _on_line_at(reg.ra, reg.rs, top)
        _close(reg, tl_pt, tr_pt)

    polys = {v: regions[v].poly for v in range(n)}
    d = DyadicDrawing(scale=S, polygons=polys)  # type: ignore[arg-type]
    total = sum(_doubled_area(p) for p in polys.values())  # type: ignore[union-attr]
    if total != 2 * S * S:
        raise GraphError("exact carving does not tile the initial triangle")
    return d


def _close(reg: _Region, tl_pt: Point, tr_pt: Point) -> None:
    if reg.poly is not None:
        raise GraphError(f"region {reg.vertex} closed twice")
    pts: list[Point] = []
    pts.extend(reg.left[:1])
    if reg.right[0] != reg.left[0]:
        pts.append(reg.right[0])
    pts.extend(reg.right[1:])
    if tr_pt != pts[-1]:
        pts.append(tr_pt)
    if tl_pt != tr_pt:
        pts.append(tl_pt)
    rest = list(reversed(reg.left[1:]))
    for q in rest:
        if q != pts[-1] and q != pts[0]:
            pts.append(q)
    if _doubled_area(pts) <= 0:
        raise GraphError(f"region {reg.vertex} degenerate at close")
    reg.poly = pts


def _doubled_area(pts: list[Point]) -> int:
    s = 0
    for i in range(len(pts)):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % len(pts)]
        s += x1 * y2 - x2 * y1
    return s


# ---------------------------------------------------------------------------
# Tree extraction from bare geometry
# ---------------------------------------------------------------------------


def extract_tree(d: DyadicDrawing) -> CappedBinaryTree:
    """Rebuild the capped binary tree from the polygons alone.

    All polygon sides are split at every drawing vertex lying on them;
    the non-horizontal atomic segments form the tree (parent below),
    and maximal horizontal runs form the cap sets.
    """
    pts: set[Point] = set()
    segs: set[tuple[Point, Point]] = set()
    for poly in d.polygons.values():
        for k in range(len(poly)):
            a, b = poly[k], poly[(k + 1) % len(poly)]
            pts.add(a)
            segs.add((a, b) if a < b else (b, a))

    # group segments by supporting line; split at incident points
    by_line: dict[tuple, list[tuple[Point, Point]]] = {}
    for a, b in segs:
        dx, dy = b[0] - a[0], b[1] - a[1]
        if dy == 0:
            key = ("h", a[1])
        elif dx == dy:
            key = ("p", a[1] - a[0])
        elif dx == -dy:
            key = ("m", a[1] + a[0])
        else:
            raise GraphError(f"segment {a}-{b} is not in the slope set")
        by_line.setdefault(key, []).append((a, b))

    def on_key(p: Point, key: tuple) -> bool:
        kind, c = key
        if kind == "h":
            return p[1] == c
        if kind == "p":
            return p[1] - p[0] == c
        return p[1] + p[0] == c

    atomic: set[tuple[Point, Point]] = set()
    for key, lst in by_line.items():
        line_pts = sorted(p for p in pts if on_key(p, key))
        for a, b in lst:
            inner = [p for p in line_pts if a <= p <= b]
            for u, v in zip(inner, inner[1:]):
                atomic.add((u, v))

    nodes = sorted(pts)
    nid = {p: k for k, p in enumerate(nodes)}
    nn = len(nodes)
    left = [-1] * nn
    right = [-1] * nn
    horizontals: list[tuple[Point, Point]] = []
    for a, b in atomic:
        if a[1] == b[1]:
            horizontals.append((a, b))
            continue
        lo, hi = (a, b) if a[1] < b[1] else (b, a)
        # child above the parent; left child up-left, right child up-right
        if hi[0] < lo[0]:
            if left[nid[lo]] != -1:
                raise GraphError(f"two left children at {lo}")
            left[nid[lo]] = nid[hi]
        else:
            if right[nid[lo]] != -1:
                raise GraphError(f"two right children at {lo}")
            right[nid[lo]] = nid[hi]

    has_parent = [False] * nn
    for i in range(nn):
        for c in (left[i], right[i]):
            if c != -1:
                has_parent[c] = True
    roots = [i for i in range(nn) if not has_parent[i]]
    if len(roots) != 1:
        raise GraphError(f"extracted structure has {len(roots)} roots")

    # cap sets: maximal horizontal chains, left to right
    hby_y: dict[int, list[tuple[int, int]]] = {}
    for a, b in horizontals:
        hby_y.setdefault(a[1], []).append((min(a[0], b[0]), max(a[0], b[0])))
    cap_sets: list[list[int]] = []
    for y, iv in sorted(hby_y.items()):
        iv.sort()
        run: list[int] = []
        prev_end = None
        for x1, x2 in iv:
            if prev_end is not None and x1 == prev_end:
                run.append(nid[(x2, y)])
            else:
                if run:
                    cap_sets.append(run)
                run = [nid[(x1, y)], nid[(x2, y)]]
            prev_end = x2
        if run:
            cap_sets.append(run)

    return CappedBinaryTree(root=roots[0], left=left, right=right, cap_sets=cap_sets)
