"""Augment a connected embedded planar graph to a full triangulation.

Two combinatorial passes, both embedding-preserving:

* ``biconnect`` — at every articulation vertex v, whenever two consecutive
  neighbors u, w of v belong to different biconnected components, a new
  degree-2 vertex z with edges (z,u), (z,w) is inserted in that corner's
  face.  One pass removes every cut vertex.
* ``stellate`` — every face that is not a triangle receives one interior
  vertex joined to all its boundary vertices.  If the outer face was
  stellated, one of the new triangles is designated as the new outer face.

Dummy vertices get ids starting at the original count, so removing them
restores the input graph exactly.  ``strip`` converts dummy polygons of a
finished layout into holes.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from .graph import EmbeddedGraph, GraphError, faces, is_triangulated, validate


@dataclass
class AugmentationRecord:
    """Dummy vertices/edges added on the way to a triangulation."""

    original_n: int
    dummy_vertices: set[int] = field(default_factory=set)
    dummy_edges: set[tuple[int, int]] = field(default_factory=set)

    def add_edge(self, u: int, v: int) -> None:
        self.dummy_edges.add((u, v) if u < v else (v, u))

    def merged_with(self, other: "AugmentationRecord") -> "AugmentationRecord":
        return AugmentationRecord(
            self.original_n,
            self.dummy_vertices | other.dummy_vertices,
            self.dummy_edges | other.dummy_edges,
        )

    @property
    def empty(self) -> bool:
        return not self.dummy_vertices and not self.dummy_edges

    def to_json_dict(self) -> dict:
        return {
            "original_n": self.original_n,
            "dummy_vertices": sorted(self.dummy_vertices),
            "dummy_edges": sorted(list(e) for e in self.dummy_edges),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "AugmentationRecord":
        return cls(
            d["original_n"],
            set(d["dummy_vertices"]),
            {tuple(e) for e in d["dummy_edges"]},
        )


def restricted_rotation(g: EmbeddedGraph, rec: AugmentationRecord) -> list[list[int]]:
    """Rotation system of g with all dummy vertices deleted."""
    keep = rec.original_n
    return [
        [w for w in g.rotation[v] if w < keep]
        for v in range(keep)
    ]


# ---------------------------------------------------------------------------
# Biconnection
# ---------------------------------------------------------------------------


def _biconnected_edge_components(g: EmbeddedGraph) -> dict[tuple[int, int], int]:
    """Label every undirected edge with its biconnected-component id."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    comp: dict[tuple[int, int], int] = {}
    comp_count = 0
    estack: list[tuple[int, int]] = []
    timer = 0

    def ekey(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            u, i = stack[-1]
            rot = g.rotation[u]
            if i < len(rot):
                stack[-1] = (u, i + 1)
                v = rot[i]
                if disc[v] == -1:
                    parent[v] = u
                    disc[v] = low[v] = timer
                    timer += 1
                    estack.append((u, v))
                    stack.append((v, 0))
                elif v != parent[u] and disc[v] < disc[u]:
                    estack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                stack.pop()
                p = parent[u]
                if p != -1:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        # (p, u) closes one biconnected component
                        while True:
                            a, b = estack.pop()
                            comp[ekey(a, b)] = comp_count
                            if (a, b) == (p, u):
                                break
                        comp_count += 1
        # isolated vertex: nothing to label
    return comp


class _OuterTracker:
    """Outer face as a doubly-linked cycle of directed edges."""

    def __init__(self, outer: tuple[int, ...]):
        k = len(outer)
        self.nxt: dict[tuple[int, int], tuple[int, int]] = {}
        self.prv: dict[tuple[int, int], tuple[int, int]] = {}
        if k >= 2:
            ring = [(outer[i], outer[(i + 1) % k]) for i in range(k)]
            for i, e in enumerate(ring):
                self.nxt[e] = ring[(i + 1) % k]
                self.prv[ring[(i + 1) % k]] = e

    def corner_replace(self, u: int, v: int, w: int, z: int) -> None:
        """If the corner u->v->w lies on the outer cycle, reroute it via z."""
        e1, e2 = (u, v), (v, w)
        if self.nxt.get(e1) != e2:
            return
        before = self.prv.pop(e1)
        after = self.nxt.pop(e2)
        del self.nxt[e1], self.prv[e2]
        a, b = (u, z), (z, w)
        self.nxt[before] = a
        self.prv[a] = before
        self.nxt[a] = b
        self.prv[b] = a
        self.nxt[b] = after
        self.prv[after] = b

    def vertices(self) -> tuple[int, ...]:
        if not self.nxt:
            return ()
        start = next(iter(self.nxt))
        seq = [start[0]]
        e = self.nxt[start]
        while e != start:
            seq.append(e[0])
            e = self.nxt[e]
        return tuple(seq)


def biconnect(g: EmbeddedGraph) -> tuple[EmbeddedGraph, AugmentationRecord]:
    """Remove every articulation point by inserting degree-2 corner vertices.

    At a cut vertex v with consecutive neighbors u, w whose edges lie in
    different biconnected components, a new vertex z adjacent to u and w is
    placed inside the face of the corner u->v->w, merging the components.
    """
    validate(g).raise_if_failed()
    rec = AugmentationRecord(g.n)
    if g.n < 3 or g.m < 2:
        return g, rec

    comp = _biconnected_edge_components(g)

    def ekey(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    rotation = [list(r) for r in g.rotation]
    outer = _OuterTracker(g.outer_face)
    uf: dict[int, int] = {}

    def find(c: int) -> int:
        r = c
        while uf.get(r, r) != r:
            r = uf[r]
        while uf.get(c, c) != c:
            uf[c], c = r, uf[c]
        return r

    # Corners are read from the evolving rotation: an earlier insertion can
    # make z a neighbor of a later articulation vertex, and the component
    # split then shows up between z and the next original neighbor.
    new_id = g.n
    for v in range(g.n):
        rot = list(rotation[v])  # snapshot; v's own rotation never changes here
        d = len(rot)
        if d < 2:
            continue
        for i in range(d):
            u, w = rot[i], rot[(i + 1) % d]
            cu, cw = find(comp[ekey(v, u)]), find(comp[ekey(v, w)])
            if cu == cw:
                continue
            z = new_id
            new_id += 1
            rec.dummy_vertices.add(z)
            rec.add_edge(z, u)
            rec.add_edge(z, w)
            rotation.append([u, w])
            # z sits inside the face of the corner u -> v -> w
            rotation[u].insert(rotation[u].index(v), z)
            rotation[w].insert(rotation[w].index(v) + 1, z)
            outer.corner_replace(u, v, w, z)
            uf[find(cu)] = find(cw)
            root = find(cw)
            comp[ekey(z, u)] = root
            comp[ekey(z, w)] = root

    if new_id == g.n:
        return g, rec
    out = EmbeddedGraph(new_id, rotation, outer.vertices(), None)
    validate(out).raise_if_failed()
    return out, rec


# ---------------------------------------------------------------------------
# Stellation
# ---------------------------------------------------------------------------


def stellate(g: EmbeddedGraph) -> tuple[EmbeddedGraph, AugmentationRecord]:
    """Triangulate by adding one interior vertex per non-triangular face.

    Faces must be simple cycles (biconnect first); the single-edge graph's
    digon walk is accepted and becomes a triangle.  If the outer face gets
    stellated, the triangle on its first two boundary vertices becomes the
    new outer face; the stellation vertex is a dummy.
    """
    validate(g).raise_if_failed()
    rec = AugmentationRecord(g.n)
    fl = faces(g)
    outer = tuple(g.outer_face)

    rotation = [list(r) for r in g.rotation]
    new_id = g.n
    new_outer = outer
    for f in fl:
        if len(f) == 3:
            continue
        vs = f.vertices
        if len(set(vs)) != len(vs):
            raise GraphError(
                "face with repeated vertices cannot be stellated; biconnect first"
            )
        z = new_id
        new_id += 1
        rec.dummy_vertices.add(z)
        for a in vs:
            rec.add_edge(z, a)
        # clockwise rotation of z = reversed face traversal
        rotation.append(list(reversed(vs)))
        m = len(vs)
        for j in range(m):
            prev = vs[j - 1]
            rot_a = rotation[vs[j]]
            rot_a.insert(rot_a.index(prev) + 1, z)
        if _same_cycle(vs, outer):
            new_outer = (vs[0], vs[1], z)

    if new_id == g.n:
        return g, rec
    out = EmbeddedGraph(new_id, rotation, new_outer, None)
    validate(out).raise_if_failed()
    if not is_triangulated(out):
        raise GraphError("stellation did not produce a triangulation")
    return out, rec


def _same_cycle(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    if len(a) != len(b) or not a:
        return len(a) == len(b)
    if b[0] not in a:
        return False
    j = a.index(b[0])
    return a[j:] + a[:j] == b


# ---------------------------------------------------------------------------
# Driver and strip
# ---------------------------------------------------------------------------


def triangulate(g: EmbeddedGraph) -> tuple[EmbeddedGraph, AugmentationRecord]:
    """biconnect + stellate, with the tiny-graph cases handled explicitly."""
    validate(g).raise_if_failed()
    if g.n == 1:
        rec = AugmentationRecord(1, {1, 2}, {(0, 1), (0, 2), (1, 2)})
        tri = EmbeddedGraph(3, [[2, 1], [0, 2], [1, 0]], (0, 2, 1))
        return tri, rec
    # a valid connected embedding with m == 3n-6 is already a triangulation
    if g.n >= 3 and g.m == 3 * g.n - 6 and len(g.outer_face) == 3:
        return g, AugmentationRecord(g.n)
    g1, rec1 = biconnect(g)
    g2, rec2 = stellate(g1)
    rec = rec1.merged_with(rec2)
    if not is_triangulated(g2):
        raise GraphError("augmentation failed to triangulate the graph")
    return g2, rec


def strip(layout, rec: AugmentationRecord):
    """Re-tag dummy-vertex polygons of a layout as holes.

    Geometry is retained so tiling-area accounting stays exact; only the
    vertex map shrinks back to the original ids.
    """
    if rec.empty:
        return layout
    missing = [d for d in rec.dummy_vertices if d not in layout.polygons]
    if missing:
        raise GraphError(f"augmentation record lists vertices absent from layout: {missing}")
    for v in layout.polygons:
        if v >= rec.original_n and v not in rec.dummy_vertices:
            raise GraphError(f"layout vertex {v} is neither original nor a recorded dummy")
    polygons = {v: p for v, p in layout.polygons.items() if v < rec.original_n}
    holes = list(layout.holes) + [layout.polygons[d] for d in sorted(rec.dummy_vertices)]
    return dataclasses.replace(layout, polygons=polygons, holes=holes)
