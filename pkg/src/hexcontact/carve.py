"""Incremental region carving over a canonical order, combinatorially.

Vertices are processed in canonical order inside an initial isosceles
triangle.  Each step carves a new region between the leftmost and
rightmost interval neighbors R_a, R_b: an isosceles trapezoid whose
bottom sits strictly above every previously created cut, or a degenerate
triangle when the vertex has exactly two neighbors so far.  R_a loses a
corner iff its right side currently runs at slope +1, R_b iff its left
side runs at slope -1; the regions strictly between are closed, their
tops becoming the middle nodes of the step's new cap set.

No coordinates are ever computed here: a tree node is created exactly
when a cut pins its position - the bottom endpoints of each carve and,
at the very end, the points where the surviving regions meet the top
side.  Provisional front corners never materialize.  Deleting the
horizontal (cap) edges leaves the capped binary tree, which is all the
grid drawing stage needs.  Total work is linear in the edge count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalOrder
from .graph import EmbeddedGraph, GraphError
from .tree import CappedBinaryTree

SHAPE_TAGS = (
    "opening-1", "opening-2",
    "static-1", "static-2", "static-3", "static-4",
    "closing-1", "closing-2", "closing-3", "closing-4",
)


@dataclass
class RegionRecord:
    """Per-vertex region: creation step and the <=6 corner tree nodes.

    Corners read cyclically as (bottom-left, left-cut?, top-left,
    top-right, right-cut?, bottom-right); bl == br encodes the
    zero-length bottom of a degree-2 creation.  Cut steps record when
    each side was carved, which fixes the shape class.
    """

    vertex: int
    step: int
    bl: int
    br: int
    tl: int = -1
    tr: int = -1
    lc: int = -1
    rc: int = -1
    lc_step: int = -1
    rc_step: int = -1
    closed_step: int = -1  # -1: survived to the final front

    def corners(self) -> list[int]:
        out = [self.bl]
        if self.lc != -1:
            out.append(self.lc)
        out.append(self.tl)
        out.append(self.tr)
        if self.rc != -1:
            out.append(self.rc)
        if self.br != self.bl:
            out.append(self.br)
        return out


def shape_class(rec: RegionRecord) -> str:
    """One of the ten region shapes.

    Classified by zero/positive bottom and which sides were cut; for
    doubly-cut regions the cut order separates the two closing profiles
    (the earlier cut sits deeper).
    """
    if rec.tl == -1 or rec.tr == -1:
        raise ValueError(f"region of vertex {rec.vertex} has no materialized top")
    if (rec.lc != -1) != (rec.lc_step != -1) or (rec.rc != -1) != (rec.rc_step != -1):
        raise ValueError(f"region of vertex {rec.vertex} has inconsistent cut marks")
    for s in (rec.lc_step, rec.rc_step):
        if s != -1 and s <= rec.step:
            raise ValueError(f"region of vertex {rec.vertex} was cut before it existed")
    if len(rec.corners()) > 6:
        raise ValueError(f"region of vertex {rec.vertex} has more than six corners")
    zero = rec.bl == rec.br
    if rec.lc == -1 and rec.rc == -1:
        return "opening-1" if zero else "opening-2"
    if rec.rc == -1:
        return "static-1" if zero else "static-2"
    if rec.lc == -1:
        return "static-3" if zero else "static-4"
    if rec.lc_step < rec.rc_step:
        return "closing-1" if zero else "closing-2"
    return "closing-3" if zero else "closing-4"


def carve(
    g: EmbeddedGraph, ord: CanonicalOrder
) -> tuple[CappedBinaryTree, list[RegionRecord]]:
    """Run the carving; returns the capped binary tree and one record per vertex.

    The active front is a doubly-linked list of open regions; the gap
    between neighbors carries the tree node anchoring the shared side and
    that side's topmost slope.  Each step splices the list in O(interval).
    """
    n = g.n
    if n < 3:
        raise GraphError("carving needs a triangulation on at least 3 vertices")
    order = ord.order
    intervals = ord.intervals
    if len(order) != n:
        raise GraphError("canonical order does not match the graph")

    # tree under construction
    left: list[int] = []
    right: list[int] = []
    cap_sets: list[list[int]] = []

    def new_node() -> int:
        left.append(-1)
        right.append(-1)
        return len(left) - 1

    def set_left(parent: int, child: int) -> None:
        if left[parent] != -1:
            raise GraphError(f"tree node {parent} already has a left child")
        left[parent] = child

    def set_right(parent: int, child: int) -> None:
        if right[parent] != -1:
            raise GraphError(f"tree node {parent} already has a right child")
        right[parent] = child

    # front state per vertex
    fnext = [-1] * n
    fprev = [-1] * n
    rg_anchor = [-1] * n  # gap to the right of this region
    rg_slope = [0] * n
    recs: list[RegionRecord] = [None] * n  # type: ignore[list-item]

    root = new_node()
    v0, v1 = order[0], order[1]
    recs[v0] = RegionRecord(vertex=v0, step=0, bl=root, br=root)

    # step 1: carve R_1 out of R_0's exterior-right side (slope +1 at root)
    apex1 = new_node()
    set_right(root, apex1)
    r0 = recs[v0]
    r0.rc, r0.rc_step = apex1, 1
    recs[v1] = RegionRecord(vertex=v1, step=1, bl=apex1, br=apex1)
    fnext[v0], fprev[v1] = v1, v0
    rg_anchor[v0], rg_slope[v0] = apex1, -1
    rg_anchor[v1], rg_slope[v1] = apex1, +1  # exterior-right gap

    for i in range(2, n):
        vi = order[i]
        iv = intervals[i]
        if iv is None or len(iv) < 2:
            raise GraphError(f"missing interval at step {i}")
        p = list(iv)
        t = len(p) - 1
        # the interval must be consecutive on the front
        x = p[0]
        for q in p[1:]:
            x = fnext[x]
            if x != q:
                raise GraphError(f"interval at step {i} is not consecutive on the front")

        if t == 1:
            a, s = rg_anchor[p[0]], rg_slope[p[0]]
            nl = new_node()
            if s > 0:
                set_right(a, nl)
                ra = recs[p[0]]
                ra.rc, ra.rc_step = nl, i
            else:
                set_left(a, nl)
                rb = recs[p[1]]
                rb.lc, rb.lc_step = nl, i
            nr = nl
        else:
            bnodes = []
            a, s = rg_anchor[p[0]], rg_slope[p[0]]
            nl = new_node()
            if s > 0:
                set_right(a, nl)
                ra = recs[p[0]]
                ra.rc, ra.rc_step = nl, i
            else:
                set_left(a, nl)
            bnodes.append(nl)
            for j in range(1, t - 1):
                a, s = rg_anchor[p[j]], rg_slope[p[j]]
                m = new_node()
                if s > 0:
                    set_right(a, m)
                else:
                    set_left(a, m)
                bnodes.append(m)
            a, s = rg_anchor[p[t - 1]], rg_slope[p[t - 1]]
            nr = new_node()
            if s < 0:
                set_left(a, nr)
                rb = recs[p[t]]
                rb.lc, rb.lc_step = nr, i
            else:
                set_right(a, nr)
            bnodes.append(nr)
            cap_sets.append(bnodes)
            # close the interior regions; their tops are now pinned
            for j in range(1, t):
                rm = recs[p[j]]
                rm.tl, rm.tr = bnodes[j - 1], bnodes[j]
                rm.closed_step = i

        recs[vi] = RegionRecord(vertex=vi, step=i, bl=nl, br=nr)
        fnext[p[0]], fprev[vi] = vi, p[0]
        fnext[vi], fprev[p[t]] = p[t], vi
        rg_anchor[p[0]], rg_slope[p[0]] = nl, -1
        rg_anchor[vi], rg_slope[vi] = nr, +1

    # finalize: materialize the top side of the initial triangle
    tlc = new_node()
    set_left(root, tlc)
    outer_cap = [tlc]
    r = v0
    recs[r].tl = tlc
    while fnext[r] != -1:
        a, s = rg_anchor[r], rg_slope[r]
        f = new_node()
        if s > 0:
            set_right(a, f)
        else:
            set_left(a, f)
        recs[r].tr = f
        r = fnext[r]
        recs[r].tl = f
        outer_cap.append(f)
    if r != v1:
        raise GraphError("front does not end at R_1")
    trc = new_node()
    set_right(rg_anchor[v1], trc)
    recs[v1].tr = trc
    outer_cap.append(trc)
    cap_sets.append(outer_cap)

    tree = CappedBinaryTree(root=root, left=left, right=right, cap_sets=cap_sets)
    return tree, recs
