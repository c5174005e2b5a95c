"""Canonical vertex ordering of a fully triangulated embedded graph.

Computed by reverse deletion: starting from the full graph with outer
triangle u, w, v, repeatedly remove a chord-free vertex of the current
outer cycle (never u or v), maintaining for every cycle vertex the count
of its neighbors on the cycle.  A vertex is removable exactly when that
count is 2.  Ties break toward the smallest vertex id so the order is
deterministic.  Total cost is O(E) plus the candidate heap.

``verify_canonical`` re-derives everything from scratch per prefix (outer
cycle via face traversal, 2-connectivity via articulation points) and is
the independent oracle for the fast routine.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import EmbeddedGraph, GraphError, ValidationReport, validate


@dataclass
class CanonicalOrder:
    """Vertex permutation plus, per step, the neighbor interval on the cycle.

    ``order[0] == u``, ``order[1] == v``, ``order[-1] == w``.  For i >= 2,
    ``intervals[i]`` lists order[i]'s neighbors on the outer cycle of the
    prefix graph, leftmost (u-side) first; entries 0 and 1 are None.
    """

    order: list[int]
    intervals: list[Optional[tuple[int, ...]]]

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, x in enumerate(self.order):
            pos[x] = i
        return pos

    def to_json_dict(self) -> dict:
        return {
            "order": list(self.order),
            "intervals": [list(t) if t else None for t in self.intervals],
        }


def _check_triangulated(g: EmbeddedGraph) -> None:
    # For a valid connected embedding, m == 3n - 6 forces every face to be
    # a triangle (average face length is exactly 3).
    if g.n < 3 or g.m != 3 * g.n - 6:
        raise GraphError(f"graph is not fully triangulated (n={g.n}, m={g.m})")


def _outer_triple(g: EmbeddedGraph, outer: Sequence[int]) -> tuple[int, int, int]:
    u, v, w = outer
    of = g.outer_face
    if len(of) != 3 or {u, v, w} != set(of):
        raise GraphError(f"outer triple {outer} does not match the outer face {of}")
    j = of.index(u)
    rotated = (of[j], of[(j + 1) % 3], of[(j + 2) % 3])
    if rotated != (u, w, v):
        raise GraphError(
            f"outer triple {outer} is mirror-inconsistent with the outer face "
            f"traversal {of}; expected traversal ({u}, {w}, {v})"
        )
    return u, v, w


def canonical_order(g: EmbeddedGraph, outer: Sequence[int]) -> CanonicalOrder:
    """Canonical labeling v_0=u, v_1=v, ..., v_{n-1}=w with step intervals.

    ``outer`` is the triple (u, v, w); the outer face traversal must read
    (u, w, v) so that walking the cycle from u toward w goes left to right.
    """
    validate(g).raise_if_failed()
    _check_triangulated(g)
    u, v, w = _outer_triple(g, outer)
    n = g.n
    rotation = g.rotation

    alive = bytearray([1]) * n
    on_c = bytearray(n)
    noc = [0] * n  # per cycle vertex: neighbors currently on the cycle
    next_c = [-1] * n
    prev_c = [-1] * n
    for a, b in ((u, w), (w, v), (v, u)):
        next_c[a] = b
        prev_c[b] = a
    for x in (u, w, v):
        on_c[x] = 1
    for x in (u, w, v):
        noc[x] = sum(on_c[y] for y in rotation[x])

    order = [0] * n
    intervals: list[Optional[tuple[int, ...]]] = [None] * n
    heap: list[int] = []

    def consider(x: int) -> None:
        if on_c[x] and alive[x] and x != u and x != v and noc[x] == 2:
            heapq.heappush(heap, x)

    stamp = [-1] * n  # marks this round's newcomers to the cycle

    for i in range(n - 1, 1, -1):
        if i == n - 1:
            x = w
            if noc[w] != 2:
                raise GraphError("outer vertex w has a chord to the outer cycle")
        else:
            x = -1
            while heap:
                cand = heapq.heappop(heap)
                if on_c[cand] and alive[cand] and cand not in (u, v) and noc[cand] == 2:
                    x = cand
                    break
            if x < 0:
                raise GraphError("no removable vertex: graph is not canonically orderable")
        order[i] = x
        cl, cr = prev_c[x], next_c[x]

        alive[x] = 0
        on_c[x] = 0
        # x sits above the cycle: its surviving neighbors run left-to-right
        # in counterclockwise order, i.e. against the stored rotation
        fan = [y for y in reversed(rotation[x]) if alive[y]]
        j = fan.index(cl)
        fan = fan[j:] + fan[:j]
        if fan[-1] != cr:
            raise GraphError(f"fan of vertex {x} does not end at its cycle neighbor")
        intervals[i] = tuple(fan)

        touched = []
        for y in fan:
            if on_c[y]:
                noc[y] -= 1  # x left the cycle
                touched.append(y)
        # splice the interior of the fan into the cycle
        prev = cl
        for p in fan[1:]:
            next_c[prev] = p
            prev_c[p] = prev
            prev = p
        for p in fan[1:-1]:
            on_c[p] = 1
            stamp[p] = i
        for p in fan[1:-1]:
            cnt = 0
            for q in rotation[p]:
                if alive[q] and on_c[q]:
                    cnt += 1
                    if stamp[q] != i:
                        noc[q] += 1
                        touched.append(q)
            noc[p] = cnt
            touched.append(p)
        for y in touched:
            consider(y)

    order[0] = u
    order[1] = v
    return CanonicalOrder(order, intervals)


# ---------------------------------------------------------------------------
# Independent verification
# ---------------------------------------------------------------------------


def _induced_subgraph(g: EmbeddedGraph, keep: list[int]) -> EmbeddedGraph:
    idx = {x: k for k, x in enumerate(keep)}
    rot = [[idx[y] for y in g.rotation[x] if y in idx] for x in keep]
    return EmbeddedGraph(len(keep), rot, ())


def _is_two_connected(g: EmbeddedGraph) -> bool:
    from .graph import articulation_points

    if g.n < 3:
        return False
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in g.rotation[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != g.n:
        return False
    return not articulation_points(g)


def verify_canonical(g: EmbeddedGraph, ord: CanonicalOrder) -> ValidationReport:
    """Check the two canonical-labeling criteria from first principles.

    For every step the prefix graph, its outer cycle, and 2-connectivity
    are recomputed directly; the report carries the first violated
    criterion with its step index.  Quadratic; this is the oracle.
    """
    rep = ValidationReport()
    n = g.n
    order = ord.order
    if sorted(order) != list(range(n)):
        rep.add("order is not a permutation of the vertices")
        return rep
    u, v, w = order[0], order[1], order[-1]
    if {u, v, w} != set(g.outer_face):
        rep.add(f"order endpoints {u},{v},{w} are not the outer face vertices")
    if not g.has_edge(u, v):
        rep.add(f"v0={u} and v1={v} are not adjacent")
    if rep.problems:
        return rep

    member = [False] * n
    member[u] = member[v] = True
    pos = ord.positions()

    for i in range(2, n):
        x = order[i]
        prefix = order[:i]
        sub = _induced_subgraph(g, prefix)
        if i >= 3 and not _is_two_connected(sub):
            rep.add(f"criterion 1 violated at step {i}: prefix is not 2-connected")
            return rep

        # outer cycle of the prefix: the traversal through directed (v, u)
        if i == 2:
            cycle = [u, v]
        else:
            idx = {y: k for k, y in enumerate(prefix)}
            walk = sub.face_of(idx[v], idx[u]).vertices
            cycle = [prefix[k] for k in walk]
            if len(set(cycle)) != len(cycle):
                rep.add(f"criterion 1 violated at step {i}: outer boundary is not a simple cycle")
                return rep
            if not (u in cycle and v in cycle):
                rep.add(f"outer cycle at step {i} misses u or v")
                return rep
        # path C - (u, v), leftmost (u) first
        ju = cycle.index(u)
        path = cycle[ju:] + cycle[:ju]
        if path[-1] != v:
            rep.add(f"outer cycle at step {i} does not end at v when started at u")
            return rep

        nbrs = [y for y in g.rotation[x] if member[y]]
        if len(nbrs) < 2:
            rep.add(f"criterion 2 violated at step {i}: fewer than 2 prefix neighbors")
            return rep
        on_path = [k for k, y in enumerate(path) if y in set(nbrs)]
        if len(on_path) != len(nbrs):
            rep.add(f"criterion 2 violated at step {i}: neighbor not on the outer path")
            return rep
        if on_path != list(range(on_path[0], on_path[0] + len(on_path))):
            rep.add(f"criterion 2 violated at step {i}: neighbors are not contiguous")
            return rep
        expected = tuple(path[on_path[0]: on_path[0] + len(on_path)])
        got = ord.intervals[i] if i < len(ord.intervals) else None
        if got is not None and tuple(got) != expected:
            rep.add(
                f"interval mismatch at step {i}: recorded {got}, derived {expected}"
            )
            return rep
        member[x] = True

    _ = pos
    return rep
