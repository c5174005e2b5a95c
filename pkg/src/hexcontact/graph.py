"""Embedded planar graphs as rotation systems.

A graph is stored combinatorially: for every vertex, the clockwise cyclic
order of its neighbors, plus one distinguished face traversal marking the
unbounded region.  Faces are walked with the successor rule: after entering
vertex b along the directed edge (a, b), the walk leaves along (b, c) where
c is the neighbor following a in the clockwise order at b.  Under this rule
every bounded face comes out counterclockwise and the outer face comes out
with the unbounded region on its left, i.e. clockwise around the graph.

All structures are immutable after construction; operations are pure
functions, so graphs can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised when an operation receives a structurally invalid graph."""


@dataclass
class ValidationReport:
    """Outcome of a structural check; empty ``problems`` means success."""

    problems: list[str] = field(default_factory=list)

    def add(self, msg: str) -> None:
        self.problems.append(msg)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_failed(self) -> None:
        if self.problems:
            raise GraphError("; ".join(self.problems))


@dataclass(frozen=True)
class Face:
    """One face traversal: a cyclic sequence of directed edges."""

    boundary: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.boundary)


class EmbeddedGraph:
    """Connected planar graph with a clockwise rotation system.

    Vertices are dense integers 0..n-1.  ``rotation[v]`` lists v's neighbors
    in clockwise order; ``outer_face`` is the vertex sequence of the face
    traversal bounding the unbounded region.  Optional ``labels`` carry
    external names and take no part in any algorithm.
    """

    __slots__ = ("n", "rotation", "outer_face", "labels", "_succ", "_faces", "_report")

    def __init__(
        self,
        n: int,
        rotation: Sequence[Sequence[int]],
        outer_face: Sequence[int],
        labels: Optional[Sequence[str]] = None,
    ):
        self.n = n
        self.rotation: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotation)
        self.outer_face: tuple[int, ...] = tuple(outer_face)
        self.labels: Optional[tuple[str, ...]] = tuple(labels) if labels else None
        self._succ: Optional[dict[int, int]] = None
        self._faces: Optional[list["Face"]] = None
        self._report: Optional["ValidationReport"] = None

    # -- basic accessors ---------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.rotation[u]:
                if u < v:
                    yield (u, v)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u]

    # -- face machinery ----------------------------------------------------

    def _successor_map(self) -> dict[int, int]:
        """Map b*n+a -> neighbor following a in the clockwise order at b."""
        succ = self._succ
        if succ is None:
            n = self.n
            succ = {}
            for b in range(n):
                rot = self.rotation[b]
                d = len(rot)
                base = b * n
                prev = rot[-1]
                for a in rot:
                    succ[base + prev] = a
                    prev = a
            self._succ = succ
        return succ

    def face_of(self, a: int, b: int) -> Face:
        """The face traversal containing directed edge (a, b)."""
        succ = self._successor_map()
        n = self.n
        boundary = []
        x, y = a, b
        while True:
            boundary.append((x, y))
            x, y = y, succ[y * n + x]
            if (x, y) == (a, b):
                break
        return Face(tuple(boundary))

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "rotation": [list(r) for r in self.rotation],
            "outer_face": list(self.outer_face),
        }
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "EmbeddedGraph":
        return cls(d["n"], d["rotation"], d["outer_face"], d.get("labels"))

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def validate(g: EmbeddedGraph) -> ValidationReport:
    """Check every EmbeddedGraph invariant; the report lists all violations.

    An empty report certifies a planar embedding of a simple connected graph:
    symmetric rotation, no loops or parallel edges, Euler's formula for the
    rotation system's face count, and an outer face matching one traversal.
    """
    if g._report is not None:
        return g._report
    rep = ValidationReport()
    g._report = rep
    n = g.n
    if n <= 0:
        rep.add("graph must have at least one vertex")
        return rep
    if len(g.rotation) != n:
        rep.add(f"rotation has {len(g.rotation)} entries for n={n}")
        return rep

    edge_count = 0
    for u in range(n):
        seen = set()
        for v in g.rotation[u]:
            if not (0 <= v < n):
                rep.add(f"vertex {u} lists out-of-range neighbor {v}")
                return rep
            if v == u:
                rep.add(f"self-loop at vertex {u}")
            if v in seen:
                rep.add(f"parallel edge {u}-{v} (repeated in rotation of {u})")
            seen.add(v)
        edge_count += len(seen)
    if not rep.ok:
        return rep

    nbr_sets = [set(g.rotation[u]) for u in range(n)]
    for u in range(n):
        for v in g.rotation[u]:
            if u not in nbr_sets[v]:
                rep.add(f"asymmetric rotation: {u} lists {v} but not vice versa")
    if not rep.ok:
        return rep

    m = edge_count // 2

    # connectivity
    if n > 1:
        seen_v = bytearray(n)
        stack = [0]
        seen_v[0] = 1
        reached = 1
        while stack:
            u = stack.pop()
            for v in g.rotation[u]:
                if not seen_v[v]:
                    seen_v[v] = 1
                    reached += 1
                    stack.append(v)
        if reached != n:
            rep.add(f"graph is disconnected ({reached} of {n} vertices reachable)")
            return rep

    # Euler's formula over the face traversals of the rotation system
    if g._faces is not None:
        f = len(g._faces)
    else:
        succ = g._successor_map()
        visited: set[int] = set()
        f = 0
        for key in succ:
            b, a = divmod(key, n)  # key stands for the directed edge (a, b)
            if a * n + b in visited:
                continue
            f += 1
            x, y = a, b
            while True:
                k2 = x * n + y
                if k2 in visited:
                    break
                visited.add(k2)
                x, y = y, succ[y * n + x]
    if m > 0 and n - m + f != 2:
        rep.add(f"Euler's formula violated: V-E+F = {n}-{m}+{f} = {n - m + f}")

    # outer face must be one of the traversals
    if m > 0:
        of = g.outer_face
        if len(of) < 2:
            rep.add("outer_face must list a face traversal")
        else:
            a, b = of[0], of[1]
            if b not in nbr_sets[a]:
                rep.add(f"outer_face starts with non-edge {a}-{b}")
            else:
                walk = g.face_of(a, b).vertices
                if walk != tuple(of):
                    rep.add("outer_face does not match any face traversal")
    elif n == 1 and tuple(g.outer_face) not in ((), (0,)):
        rep.add("outer_face of an edgeless graph must be empty or (0,)")
    return rep


def faces(g: EmbeddedGraph, _skip_validation: bool = False) -> list[Face]:
    """All face traversals of the rotation system.

    Every directed edge appears in exactly one returned face, and for a
    valid embedding len(faces) == 2 - V + E.
    """
    if not _skip_validation:
        validate(g).raise_if_failed()
    if g._faces is not None:
        return g._faces
    succ = g._successor_map()
    n = g.n
    out: list[Face] = []
    visited: set[int] = set()
    for u in range(n):
        for v in g.rotation[u]:
            if u * n + v in visited:
                continue
            boundary = []
            x, y = u, v
            while True:
                key = x * n + y
                if key in visited:
                    break
                visited.add(key)
                boundary.append((x, y))
                x, y = y, succ[y * n + x]
            out.append(Face(tuple(boundary)))
    g._faces = out
    return out


def outer_face_index(g: EmbeddedGraph, face_list: list[Face]) -> int:
    """Index in ``face_list`` of the traversal equal to g.outer_face."""
    target = g.outer_face
    k = len(target)
    for i, f in enumerate(face_list):
        if len(f) != k:
            continue
        vs = f.vertices
        if target[0] in vs:
            j = vs.index(target[0])
            if vs[j:] + vs[:j] == target:
                return i
    raise GraphError("outer face not found among face traversals")


def is_triangulated(g: EmbeddedGraph) -> bool:
    """True iff every face, including the outer one, has length 3."""
    return all(len(f) == 3 for f in faces(g))


def articulation_points(g: EmbeddedGraph) -> set[int]:
    """Cut vertices, by iterative depth-first lowpoint computation."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    result: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, i = stack[-1]
            rot = g.rotation[u]
            if i < len(rot):
                stack[-1] = (u, i + 1)
                v = rot[i]
                if disc[v] == -1:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif v != parent[u]:
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                stack.pop()
                p = parent[u]
                if p != -1:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if p != root and low[u] >= disc[p]:
                        result.add(p)
        if root_children > 1:
            result.add(root)
    return result


def is_biconnected(g: EmbeddedGraph) -> bool:
    return g.n >= 3 and not articulation_points(g)


def dual(g: EmbeddedGraph) -> EmbeddedGraph:
    """The dual embedded graph: one vertex per face, edges across edges.

    Requires a biconnected input so faces are simple cycles and the dual is
    itself a simple embedded graph.  The dual's outer face is the face cycle
    around the primal outer face's first vertex.
    """
    validate(g).raise_if_failed()
    if not is_biconnected(g):
        raise GraphError("dual requires a biconnected graph")
    fl = faces(g)
    face_id: dict[tuple[int, int], int] = {}
    for i, f in enumerate(fl):
        for de in f.boundary:
            face_id[de] = i

    # Every face traversal keeps its face on the left, so the crossing
    # points of the dual edges appear counterclockwise around the dual
    # vertex in traversal order; reverse for a clockwise rotation.
    rotation = []
    for f in fl:
        rotation.append([face_id[(b, a)] for (a, b) in reversed(f.boundary)])

    # Dual outer face: the dual face around primal vertex outer_face[0],
    # i.e. the traversal whose vertex set is the set of faces at v0.
    v0 = g.outer_face[0]
    ring = frozenset(face_id[(v0, u)] for u in g.rotation[v0])
    dg = EmbeddedGraph(len(fl), rotation, ())
    for f in faces(dg, _skip_validation=True):
        if len(f) == len(g.rotation[v0]) and frozenset(f.vertices) == ring:
            dg = EmbeddedGraph(len(fl), rotation, f.vertices)
            break
    else:
        raise GraphError("could not locate the dual outer face")
    validate(dg).raise_if_failed()
    return dg


# ---------------------------------------------------------------------------
# Embedded isomorphism (used by tests and the dual/dual round-trip check)
# ---------------------------------------------------------------------------


def _canonical_code(g: EmbeddedGraph, start: int, first_nbr: int, mirror: bool) -> tuple:
    """BFS encoding of the rotation system from a rooted, oriented corner."""
    ids = {start: 0}
    order = [start]
    anchor = {start: first_nbr}
    code = []
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        rot = g.rotation[u]
        if mirror:
            rot = tuple(reversed(rot))
        k = rot.index(anchor[u])
        seq = [rot[(k + i) % len(rot)] for i in range(len(rot))]
        row = []
        for v in seq:
            if v not in ids:
                ids[v] = len(order)
                order.append(v)
                anchor[v] = u
            row.append(ids[v])
        code.append(tuple(row))
    return tuple(code)


def canonical_form(g: EmbeddedGraph, respect_mirror: bool = False) -> tuple:
    """Smallest BFS code over all rooted corners (and reflections).

    Two embedded graphs are combinatorially isomorphic (up to reflection,
    unless ``respect_mirror``) iff their canonical forms are equal.
    Quadratic-ish; intended for small graphs in tests.
    """
    best = None
    mirrors = (False,) if respect_mirror else (False, True)
    for mirror in mirrors:
        for u in range(g.n):
            for v in g.rotation[u]:
                c = _canonical_code(g, u, v, mirror)
                if best is None or c < best:
                    best = c
    return best if best is not None else ()


def embedded_isomorphic(g1: EmbeddedGraph, g2: EmbeddedGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1) == canonical_form(g2)
