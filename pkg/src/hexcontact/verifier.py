"""Exact verification that a layout realizes a graph.

Everything here is integer arithmetic; there are no tolerances.  Contact
is decided by grouping polygon sides by supporting line and intersecting
the 1-D parameter intervals: two regions touch iff some pair of their
sides overlaps in a segment of positive length (a point is not contact).
Geometry checks convexity, side count, the mode's slope set and pairwise
interior disjointness; tiling checks that the directed atomic boundary
segments cancel in opposite pairs except for one convex outer cycle, and
that doubled areas add up exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional

from .graph import EmbeddedGraph, GraphError

Point = tuple[int, int]

SLOPE_SETS = {
    "standard": {(1, 0), (1, 1), (1, -1)},
    "rotated": {(1, 0), (0, 1), (1, -1)},
    "kant-rectilinear": {(1, 0), (0, 1), (1, -1)},
}
# the exact oracle emits standard-slope polygons at a power-of-two scale
SLOPE_SETS["standard-exact"] = SLOPE_SETS["standard"]


@dataclass
class ContactReport:
    """Everything a layout can get wrong, or empty if it is correct."""

    missing_adjacencies: list[tuple[int, int]] = field(default_factory=list)
    spurious_adjacencies: list[tuple[int, int]] = field(default_factory=list)
    geometry_violations: list[str] = field(default_factory=list)
    tiling: Optional[dict] = None

    @property
    def ok(self) -> bool:
        if self.missing_adjacencies or self.spurious_adjacencies:
            return False
        if self.geometry_violations:
            return False
        if self.tiling is not None and self.tiling.get("uncovered_2a", 0) != 0:
            return False
        return True

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "missing_adjacencies": sorted(self.missing_adjacencies),
            "spurious_adjacencies": sorted(self.spurious_adjacencies),
            "geometry_violations": list(self.geometry_violations),
            "tiling": self.tiling,
        }


# ---------------------------------------------------------------------------
# line/segment helpers
# ---------------------------------------------------------------------------


def _line_key(a: Point, b: Point) -> tuple[tuple[int, int], int]:
    dx, dy = b[0] - a[0], b[1] - a[1]
    g = gcd(abs(dx), abs(dy))
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    c = dx * a[1] - dy * a[0]
    return (dx, dy), c


def _param(direction: tuple[int, int], p: Point) -> int:
    return direction[0] * p[0] + direction[1] * p[1]


def _sides(poly: list[Point]) -> Iterable[tuple[Point, Point]]:
    for i in range(len(poly)):
        yield poly[i], poly[(i + 1) % len(poly)]


def doubled_area(poly: list[Point]) -> int:
    s = 0
    for (x1, y1), (x2, y2) in _sides(poly):
        s += x1 * y2 - x2 * y1
    return s


def _contact_pairs(polygons: dict[int, list[Point]]) -> set[tuple[int, int]]:
    """All vertex pairs whose polygons share boundary of positive length."""
    by_line: dict[tuple, list[tuple[int, int, int]]] = {}
    for v, poly in polygons.items():
        for a, b in _sides(poly):
            d, c = _line_key(a, b)
            t1, t2 = _param(d, a), _param(d, b)
            if t1 > t2:
                t1, t2 = t2, t1
            by_line.setdefault((d, c), []).append((t1, t2, v))
    out: set[tuple[int, int]] = set()
    for ivs in by_line.values():
        ivs.sort()
        active: list[tuple[int, int, int]] = []
        for t1, t2, v in ivs:
            keep = []
            for u1, u2, w in active:
                if u2 > t1:  # positive-length overlap
                    keep.append((u1, u2, w))
                    if w != v:
                        out.add((w, v) if w < v else (v, w))
            keep.append((t1, t2, v))
            active = keep
    return out


def verify_contact(g: EmbeddedGraph, layout) -> ContactReport:
    """Adjacency iff positive-length shared boundary, exactly."""
    rep = ContactReport()
    have = set(layout.polygons.keys())
    want = set(range(g.n))
    if have != want:
        raise GraphError(
            f"layout vertex set mismatch: extra {sorted(have - want)}, "
            f"missing {sorted(want - have)}"
        )
    contacts = _contact_pairs(layout.polygons)
    edges = g.edge_set()
    rep.missing_adjacencies = sorted(edges - contacts)
    rep.spurious_adjacencies = sorted(contacts - edges)
    return rep


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------


def _check_polygon(tag: str, poly: list[Point], slopes: set, rep: ContactReport) -> None:
    if len(poly) < 3:
        rep.geometry_violations.append(f"{tag}: fewer than 3 corners")
        return
    if doubled_area(poly) <= 0:
        rep.geometry_violations.append(f"{tag}: not positively oriented (ccw)")
        return
    k = len(poly)
    sides = 0
    for i in range(k):
        a = poly[i]
        b = poly[(i + 1) % k]
        c = poly[(i + 2) % k]
        if a == b:
            rep.geometry_violations.append(f"{tag}: repeated corner {a}")
            return
        d1 = (b[0] - a[0], b[1] - a[1])
        d2 = (c[0] - b[0], c[1] - b[1])
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross < 0:
            rep.geometry_violations.append(f"{tag}: reflex corner at {b}")
        if cross != 0:
            sides += 1
        dkey, _ = _line_key(a, b)
        if dkey not in slopes:
            rep.geometry_violations.append(f"{tag}: side {a}-{b} slope {dkey} not allowed")
    if sides == 0:
        rep.geometry_violations.append(f"{tag}: degenerate (all corners collinear)")
    elif sides > 6:
        rep.geometry_violations.append(f"{tag}: {sides} sides exceed 6")


def _bbox(poly: list[Point]) -> tuple[int, int, int, int]:
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def _convex_interiors_overlap(p1: list[Point], p2: list[Point]) -> bool:
    """Separating-axis test; touching boundaries do not count as overlap."""
    for poly in (p1, p2):
        for a, b in _sides(poly):
            nx, ny = -(b[1] - a[1]), b[0] - a[0]  # inner normal of a ccw side
            lo1 = hi1 = nx * p1[0][0] + ny * p1[0][1]
            for q in p1:
                t = nx * q[0] + ny * q[1]
                lo1, hi1 = min(lo1, t), max(hi1, t)
            lo2 = hi2 = nx * p2[0][0] + ny * p2[0][1]
            for q in p2:
                t = nx * q[0] + ny * q[1]
                lo2, hi2 = min(lo2, t), max(hi2, t)
            if hi1 <= lo2 or hi2 <= lo1:
                return False
    return True


def verify_geometry(layout, mode: Optional[str] = None, *, check_overlap: Optional[bool] = None) -> ContactReport:
    """Convexity, side count <= 6, slope set, grid bounds, disjointness.

    ``check_overlap=None`` runs the quadratic pairwise test only up to a
    size threshold; tilings get their exact overlap check from
    verify_tiling's cancellation instead.
    """
    rep = ContactReport()
    mode = mode or layout.mode
    slopes = SLOPE_SETS.get(mode)
    if slopes is None:
        raise GraphError(f"unknown slope mode {mode!r}")

    named = [(f"vertex {v}", poly) for v, poly in layout.polygons.items()]
    named += [(f"hole {i}", poly) for i, poly in enumerate(layout.holes)]
    for tag, poly in named:
        _check_polygon(tag, poly, slopes, rep)

    gw, gh = layout.grid
    for tag, poly in named:
        x1, y1, x2, y2 = _bbox(poly)
        if x2 - x1 > gw or y2 - y1 > gh:
            rep.geometry_violations.append(f"{tag}: exceeds declared grid {gw}x{gh}")

    if check_overlap is None:
        check_overlap = len(named) <= 1500
    if check_overlap and not rep.geometry_violations:
        boxes = sorted(
            (( *_bbox(poly), tag, poly) for tag, poly in named), key=lambda b: b[0]
        )
        for i in range(len(boxes)):
            x1, y1, x2, y2, tag1, p1 = boxes[i]
            for j in range(i + 1, len(boxes)):
                u1, v1, u2, v2, tag2, p2 = boxes[j]
                if u1 >= x2:
                    break
                if v1 >= y2 or v2 <= y1:
                    continue
                if _convex_interiors_overlap(p1, p2):
                    rep.geometry_violations.append(
                        f"{tag1} and {tag2}: interiors overlap"
                    )
    return rep


# ---------------------------------------------------------------------------
# tiling
# ---------------------------------------------------------------------------


def _atomic_counts(polys: list[list[Point]]):
    """Split every directed side into atomic pieces; count both directions."""
    pts_by_line: dict[tuple, set[int]] = {}
    segs: list[tuple[tuple, int, int]] = []
    for poly in polys:
        for a, b in _sides(poly):
            d, c = _line_key(a, b)
            key = (d, c)
            t1, t2 = _param(d, a), _param(d, b)
            pts_by_line.setdefault(key, set()).update((t1, t2))
            segs.append((key, t1, t2))
    splits = {key: sorted(ts) for key, ts in pts_by_line.items()}
    counts: dict[tuple, list[int]] = {}
    import bisect

    for key, t1, t2 in segs:
        ts = splits[key]
        lo, hi = (t1, t2) if t1 < t2 else (t2, t1)
        fwd = t1 < t2
        i1 = bisect.bisect_left(ts, lo)
        i2 = bisect.bisect_left(ts, hi)
        for k in range(i1, i2):
            piece = (key, ts[k], ts[k + 1])
            cnt = counts.setdefault(piece, [0, 0])
            cnt[0 if fwd else 1] += 1
    return counts


def verify_tiling(layout, outer: Optional[list[Point]] = None) -> ContactReport:
    """Exact subdivision check: opposite boundary pieces cancel, the
    leftovers form one convex outer cycle, and doubled areas balance."""
    rep = ContactReport()
    polys = list(layout.polygons.values()) + list(layout.holes)
    if not polys:
        rep.geometry_violations.append("tiling: empty layout")
        return rep
    counts = _atomic_counts(polys)

    leftover: list[tuple[tuple, int, int]] = []
    for piece, (fwd, bwd) in counts.items():
        if fwd > 1 or bwd > 1:
            rep.geometry_violations.append(
                f"tiling: boundary piece {piece} covered {max(fwd, bwd)} times"
            )
        elif fwd == 1 and bwd == 0:
            leftover.append(piece)
        elif fwd == 0 and bwd == 1:
            (d, c), t1, t2 = piece
            leftover.append(((d, c), t2, t1))
    if rep.geometry_violations:
        return rep

    # stitch the leftover pieces into cycles
    def endpoint(key: tuple, t: int) -> Point:
        (dx, dy), c = key
        # solve dx*x + dy*y = t, dx*y - dy*x = c
        n2 = dx * dx + dy * dy
        x = (dx * t - dy * c)
        y = (dy * t + dx * c)
        if x % n2 or y % n2:
            raise GraphError("non-lattice line intersection in tiling check")
        return (x // n2, y // n2)

    succ: dict[Point, Point] = {}
    for key, t1, t2 in leftover:
        a, b = endpoint(key, t1), endpoint(key, t2)
        if a in succ:
            rep.geometry_violations.append(f"tiling: branching outer boundary at {a}")
            return rep
        succ[a] = b
    if succ:
        start = next(iter(succ))
        cyc = [start]
        cur = succ[start]
        while cur != start:
            cyc.append(cur)
            if cur not in succ:
                rep.geometry_violations.append("tiling: outer boundary is not closed")
                return rep
            cur = succ[cur]
            if len(cyc) > len(succ):
                break
        if len(cyc) != len(succ):
            rep.geometry_violations.append("tiling: outer boundary splits into cycles")
            return rep
        hull_2a = doubled_area(cyc)
    else:
        cyc = []
        hull_2a = 0

    covered = sum(doubled_area(p) for p in layout.polygons.values())
    holes = sum(doubled_area(p) for p in layout.holes)
    outer_2a = doubled_area(outer) if outer is not None else hull_2a
    rep.tiling = {
        "outer_2a": outer_2a,
        "covered_2a": covered,
        "holes_2a": holes,
        "uncovered_2a": outer_2a - covered - holes,
    }
    if outer is not None and hull_2a != outer_2a:
        rep.geometry_violations.append(
            f"tiling: stitched hull area {hull_2a} != outer area {outer_2a}"
        )
    return rep
