"""Grid drawing of a capped binary tree with slopes +1/-1 and level caps.

The tree is consumed bottom-up in rounds.  Each round takes the active
front: the maximal set of current leaves in which every cap set appears
all-or-none.  A front node with one subtree extends that subtree's slope
line one unit; a node with two subtrees shifts the right subtree so the
closest approach between the subtrees is 1 or 2 - whichever parity lands
the parent on a grid point - and records the shift at the right subtree's
root.  Complete cap sets are then leveled to the deepest member's row,
sliding one-child members down their slope lines.  A final preorder pass
applies the accumulated shifts.

The closest approach is found by zipping the subtrees' boundary cap-node
lists: the right-boundary list of the left subtree against the left-
boundary list of the right subtree.  Matched entries are consecutive
members of one cap set and therefore share a row; lists store horizontal
offsets relative to their subtree root, so a merge costs O(matched) plus
O(1) relinking, amortized linear overall.  A per-row scan of whole
subtrees is kept as a slow differential oracle.

The result fits (n-1) x (n-1)/2; rotating the 45-degree lattice gives
(n-1)/2 x (n-1)/2 with axis-parallel tree edges and slope -1 caps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import GraphError
from .tree import CappedBinaryTree, validate_tree


@dataclass
class GridDrawing:
    """Integer positions per tree node, plus the bounding extents."""

    xs: list[int]
    ys: list[int]
    mode: str  # "standard" or "rotated"
    width: int
    height: int

    def pos(self, i: int) -> tuple[int, int]:
        return (self.xs[i], self.ys[i])

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "positions": [[i, self.xs[i], self.ys[i]] for i in range(len(self.xs))],
        }


@dataclass
class RoundTrace:
    """One front: members with their end-of-round positions and cap depth,
    plus any shifts recorded at right-subtree roots this round."""

    nodes: list[tuple[int, int, int, Optional[int]]]  # (id, x, y, h or None)
    shifts: list[tuple[int, int]]


@dataclass
class DrawTrace:
    rounds: list[RoundTrace] = field(default_factory=list)
    final: list[tuple[int, int, int, int]] = field(default_factory=list)  # preorder


def front_sets(t: CappedBinaryTree) -> list[tuple[int, ...]]:
    """The sequence of active front node sets draw_tree consumes."""
    return [tuple(sorted(front)) for front, _caps in _rounds(t)]


def _rounds(t: CappedBinaryTree):
    n = t.n_nodes
    parent = t.parents()
    cap_of = t.cap_index()
    rem = [0] * n
    for i in range(n):
        rem[i] = (t.left[i] != -1) + (t.right[i] != -1)
    cap_left = [len(c) for c in t.cap_sets]

    ready_nodes: list[int] = []
    ready_caps: list[int] = []
    for i in range(n):
        if rem[i] == 0:
            if cap_of[i] == -1:
                ready_nodes.append(i)
            else:
                c = cap_of[i]
                cap_left[c] -= 1
                if cap_left[c] == 0:
                    ready_caps.append(c)

    processed = 0
    while ready_nodes or ready_caps:
        front = list(ready_nodes)
        for c in ready_caps:
            front.extend(t.cap_sets[c])
        yield front, list(ready_caps)
        processed += len(front)
        next_nodes: list[int] = []
        next_caps: list[int] = []
        for v in front:
            p = parent[v]
            if p == -1:
                continue
            rem[p] -= 1
            if rem[p] == 0:
                if cap_of[p] == -1:
                    next_nodes.append(p)
                else:
                    c = cap_of[p]
                    cap_left[c] -= 1
                    if cap_left[c] == 0:
                        next_caps.append(c)
        ready_nodes, ready_caps = next_nodes, next_caps
    if processed != n:
        raise GraphError("front rounds did not consume every node")


def draw_tree(
    t: CappedBinaryTree,
    *,
    merge: str = "zip",
    trace: bool = False,
    validated: bool = False,
) -> tuple[GridDrawing, Optional[DrawTrace]]:
    """Draw the capped binary tree; optionally return the per-round trace.

    ``merge`` selects the closest-approach engine: "zip" (boundary list
    zipping, linear) or "scan" (per-row subtree scan, quadratic oracle).
    """
    if not validated:
        validate_tree(t).raise_if_failed()
    if merge not in ("zip", "scan"):
        raise ValueError(f"unknown merge engine {merge!r}")
    n = t.n_nodes
    tl, tr = t.left, t.right
    cap_of = t.cap_index()
    first_of = [False] * n
    last_of = [False] * n
    for members in t.cap_sets:
        first_of[members[0]] = True
        last_of[members[-1]] = True

    px = [0] * n
    py = [0] * n
    pend = [0] * n

    # boundary lists: one cell per node per side, linked innermost-first
    lnx = [-1] * n
    ldx = [0] * n
    rnx = [-1] * n
    rdx = [0] * n
    # per-subtree-root metadata (live only while the node is a root)
    lhead = [-1] * n
    ltail = [-1] * n
    loffh = [0] * n
    lofft = [0] * n
    rhead = [-1] * n
    rtail = [-1] * n
    roffh = [0] * n
    rofft = [0] * n

    tr_obj = DrawTrace() if trace else None

    def place_leaf(v: int) -> None:
        if not first_of[v]:
            lhead[v] = ltail[v] = v
            lnx[v] = -1
        if not last_of[v]:
            rhead[v] = rtail[v] = v
            rnx[v] = -1

    def place_one_child(v: int) -> None:
        if tl[v] != -1:
            c = tl[v]
            px[v], py[v] = px[c] + 1, py[c] - 1
            # v starts a cap set: it becomes the innermost right-boundary entry
            rnx[v] = rhead[c]
            if rhead[c] != -1:
                rdx[v] = (px[c] + roffh[c]) - px[v]
                rtail[v] = rtail[c]
                rofft[v] = px[c] + rofft[c] - px[v]
            else:
                rtail[v] = v
                rofft[v] = 0
            rhead[v] = v
            roffh[v] = 0
            if lhead[c] != -1:
                lhead[v] = lhead[c]
                loffh[v] = px[c] + loffh[c] - px[v]
                ltail[v] = ltail[c]
                lofft[v] = px[c] + lofft[c] - px[v]
        else:
            c = tr[v]
            px[v], py[v] = px[c] - 1, py[c] - 1
            lnx[v] = lhead[c]
            if lhead[c] != -1:
                ldx[v] = (px[c] + loffh[c]) - px[v]
                ltail[v] = ltail[c]
                lofft[v] = px[c] + lofft[c] - px[v]
            else:
                ltail[v] = v
                lofft[v] = 0
            lhead[v] = v
            loffh[v] = 0
            if rhead[c] != -1:
                rhead[v] = rhead[c]
                roffh[v] = px[c] + roffh[c] - px[v]
                rtail[v] = rtail[c]
                rofft[v] = px[c] + rofft[c] - px[v]

    def closest_raw_zip(a: int, b: int) -> int:
        ra, lb = rhead[a], lhead[b]
        if ra == -1 or lb == -1:
            raise GraphError("merge of subtrees with empty boundary lists")
        xa = px[a] + roffh[a]
        xb = px[b] + loffh[b]
        m_raw = xb - xa
        while True:
            d = xb - xa
            if d < m_raw:
                m_raw = d
            ra2, lb2 = rnx[ra], lnx[lb]
            if ra2 == -1 or lb2 == -1:
                break
            xa += rdx[ra]
            xb += ldx[lb]
            ra, lb = ra2, lb2
        # stash walk endpoints for relinking
        closest_raw_zip.state = (ra, xa, lb, xb)
        return m_raw

    def closest_raw_scan(a: int, b: int) -> int:
        # effective per-row extremes of whole subtrees, pending shifts applied
        def collect(root: int, want_max: bool) -> dict[int, int]:
            out: dict[int, int] = {}
            stack = [(root, 0)]
            while stack:
                v, acc = stack.pop()
                acc += pend[v]
                x = px[v] + acc
                y = py[v]
                if y not in out or (x > out[y]) == want_max:
                    out[y] = x
                for c in (tl[v], tr[v]):
                    if c != -1:
                        stack.append((c, acc))
            return out
        # a is a fresh root: pend[a] not yet set by any ancestor
        amax = collect(a, True)
        bmin = collect(b, False)
        m_raw = None
        for y, x in amax.items():
            if y in bmin:
                d = bmin[y] - x
                if m_raw is None or d < m_raw:
                    m_raw = d
        if m_raw is None:
            raise GraphError("merge of subtrees with no common row")
        return m_raw

    def merge_two(v: int) -> int:
        a, b = tl[v], tr[v]
        if merge == "zip":
            m_raw = closest_raw_zip(a, b)
            ra, xa_last, lb, xb_last = closest_raw_zip.state
        else:
            m_raw = closest_raw_scan(a, b)
            # still need the zip walk for list surgery
            zr = closest_raw_zip(a, b)
            if zr != m_raw:
                raise GraphError(
                    f"zip/scan disagreement at node {v}: zip {zr}, scan {m_raw}"
                )
            ra, xa_last, lb, xb_last = closest_raw_zip.state
        c1 = px[a] + py[a]
        s = 1 - m_raw
        if (c1 + px[b] + s - py[b]) % 2 != 0:
            s += 1
        xv = (c1 + px[b] + s - py[b]) // 2
        yv = c1 - xv
        if yv >= py[a] or yv >= py[b]:
            raise GraphError(f"merge at node {v} did not land below both subtrees")
        px[v], py[v] = xv, yv
        pend[b] = s

        rem_a = rnx[ra]
        xa_rem = xa_last + rdx[ra] if rem_a != -1 else 0
        rem_b = lnx[lb]
        xb_rem = xb_last + ldx[lb] if rem_b != -1 else 0

        # left boundary of v: a's left list, then the rest of b's left list
        if lhead[a] != -1:
            lhead[v] = lhead[a]
            loffh[v] = px[a] + loffh[a] - xv
            if rem_b != -1:
                lnx[ltail[a]] = rem_b
                ldx[ltail[a]] = (xb_rem + s) - (px[a] + lofft[a])
                ltail[v] = ltail[b]
                lofft[v] = px[b] + lofft[b] + s - xv
            else:
                ltail[v] = ltail[a]
                lofft[v] = px[a] + lofft[a] - xv
        elif rem_b != -1:
            lhead[v] = rem_b
            loffh[v] = xb_rem + s - xv
            ltail[v] = ltail[b]
            lofft[v] = px[b] + lofft[b] + s - xv
        # right boundary of v: b's right list, then the rest of a's right list
        if rhead[b] != -1:
            rhead[v] = rhead[b]
            roffh[v] = px[b] + roffh[b] + s - xv
            if rem_a != -1:
                rnx[rtail[b]] = rem_a
                rdx[rtail[b]] = xa_rem - (px[b] + rofft[b] + s)
                rtail[v] = rtail[a]
                rofft[v] = px[a] + rofft[a] - xv
            else:
                rtail[v] = rtail[b]
                rofft[v] = px[b] + rofft[b] + s - xv
        elif rem_a != -1:
            rhead[v] = rem_a
            roffh[v] = xa_rem - xv
            rtail[v] = rtail[a]
            rofft[v] = px[a] + rofft[a] - xv
        return s

    def level_cap(members: list[int]) -> int:
        h = max(-py[v] for v in members)
        for v in members:
            if tl[v] == -1 and tr[v] == -1:
                py[v] = -h
                continue
            c = tl[v] if tl[v] != -1 else tr[v]
            if tl[v] != -1:
                newx = px[c] + py[c] + h
            else:
                newx = px[c] - py[c] - h
            dx = newx - px[v]
            py[v] = -h
            if dx:
                px[v] = newx
                # v is the innermost entry of one list and inherits the other
                if tl[v] != -1:
                    if rnx[v] != -1:
                        rdx[v] -= dx
                    if rtail[v] != v:
                        rofft[v] -= dx
                    if lhead[v] != -1:
                        loffh[v] -= dx
                        lofft[v] -= dx
                else:
                    if lnx[v] != -1:
                        ldx[v] -= dx
                    if ltail[v] != v:
                        lofft[v] -= dx
                    if rhead[v] != -1:
                        roffh[v] -= dx
                        rofft[v] -= dx
        return h

    for front, caps in _rounds(t):
        shifts: list[tuple[int, int]] = []
        for v in sorted(front):
            nch = (tl[v] != -1) + (tr[v] != -1)
            if nch == 0:
                place_leaf(v)
            elif nch == 1:
                place_one_child(v)
            else:
                s = merge_two(v)
                shifts.append((tr[v], s))
        hs: dict[int, int] = {}
        for c in caps:
            h = level_cap(t.cap_sets[c])
            for v in t.cap_sets[c]:
                hs[v] = h
        if tr_obj is not None:
            tr_obj.rounds.append(
                RoundTrace(
                    nodes=[(v, px[v], py[v], hs.get(v)) for v in sorted(front)],
                    shifts=shifts,
                )
            )

    # propagate shifts in preorder
    stack = [(t.root, 0)]
    while stack:
        v, acc = stack.pop()
        acc += pend[v]
        px[v] += acc
        if tr_obj is not None:
            tr_obj.final.append((v, px[v], py[v], acc))
        if tr[v] != -1:
            stack.append((tr[v], acc))
        if tl[v] != -1:
            stack.append((tl[v], acc))

    minx = min(px)
    maxy = max(py)
    if minx or maxy:
        px = [x - minx for x in px]
        py = [y - maxy for y in py]
    d = GridDrawing(px, py, "standard", max(px), -min(py))
    return d, tr_obj


def rotate_drawing(d: GridDrawing) -> GridDrawing:
    """45-degree lattice rotation: tree edges become axis-parallel, caps -1.

    Valid because every node is linked to the root by +-1 edges, so x+y
    has one parity throughout; an odd parity is normalized away by a unit
    translation first (extents are unaffected).
    """
    if d.mode != "standard":
        raise ValueError("rotate_drawing expects a standard-mode drawing")
    xs, ys = d.xs, d.ys
    par = (xs[0] + ys[0]) & 1
    for x, y in zip(xs, ys):
        if (x + y) & 1 != par:
            raise GraphError("mixed parity in standard drawing (upstream bug)")
    rx = [(x + par + y) // 2 for x, y in zip(xs, ys)]
    ry = [(y - x - par) // 2 for x, y in zip(xs, ys)]
    mx, my = min(rx), min(ry)
    rx = [x - mx for x in rx]
    ry = [y - my for y in ry]
    return GridDrawing(rx, ry, "rotated", max(rx), max(ry))
