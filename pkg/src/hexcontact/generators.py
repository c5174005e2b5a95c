"""Graph generators used as fixtures and stress inputs.

``gen_gk`` builds the lower-bound family G^k: an outer triangle A, B, C,
a chain 1..k adjacent to both A and B with consecutive chain edges, and
degree-3 vertices l_i, r_i inside the triangles (A,i,i+1) and (B,i,i+1).
Closure edges are C-1 plus the bottom face (A,k,B), the unique minimal
completion to a triangulation.  n = 3k+1 and m = 9k-3.

``gen_random_triangulation`` grows a triangulation from K3 by repeatedly
inserting a vertex into a uniformly random bounded face (a stacked
triangulation); the embedding is maintained by construction and the
result is deterministic per seed.
"""

from __future__ import annotations

import random

from .graph import EmbeddedGraph, GraphError


def k3() -> EmbeddedGraph:
    return EmbeddedGraph(3, [[2, 1], [0, 2], [1, 0]], (0, 2, 1))


def k4() -> EmbeddedGraph:
    """K4 embedded with outer face (0, 2, 1) and vertex 3 interior."""
    return EmbeddedGraph(
        4,
        [[2, 3, 1], [0, 3, 2], [1, 3, 0], [0, 2, 1]],
        (0, 2, 1),
    )


def octahedron() -> EmbeddedGraph:
    """The octahedron: 6 vertices, 12 edges, 8 triangular faces."""
    # outer triangle 0,1,2; inner triangle 3,4,5; vertex i opposite i+3
    rot = [
        [2, 5, 4, 1],
        [0, 4, 3, 2],
        [1, 3, 5, 0],
        [1, 4, 5, 2],
        [0, 5, 3, 1],
        [2, 3, 4, 0],
    ]
    return EmbeddedGraph(6, rot, (0, 2, 1))


def cube() -> EmbeddedGraph:
    """The cube graph: 8 vertices, 12 edges, 6 quadrilateral faces."""
    # outer square 0-1-2-3, nested square 4-5-6-7, spokes i - i+4
    rot = [
        [3, 4, 1],
        [2, 0, 5],
        [1, 6, 3],
        [2, 7, 0],
        [7, 5, 0],
        [6, 1, 4],
        [2, 5, 7],
        [6, 4, 3],
    ]
    return EmbeddedGraph(8, rot, (0, 3, 2, 1))


def path(n: int) -> EmbeddedGraph:
    if n < 2:
        raise GraphError("path needs at least 2 vertices")
    rot = [[1]] + [[i - 1, i + 1] for i in range(1, n - 1)] + [[n - 2]]
    outer = list(range(n)) + list(range(n - 2, 0, -1))
    return EmbeddedGraph(n, rot, outer)


def star(n: int) -> EmbeddedGraph:
    """Center 0 joined to n-1 leaves."""
    if n < 2:
        raise GraphError("star needs at least 2 vertices")
    rot = [list(range(1, n))] + [[0] for _ in range(1, n)]
    outer = []
    for leaf in range(1, n):
        outer.extend((0, leaf))
    return EmbeddedGraph(n, rot, outer)


def four_cycle() -> EmbeddedGraph:
    rot = [[1, 3], [2, 0], [3, 1], [0, 2]]
    return EmbeddedGraph(4, rot, (0, 3, 2, 1))


def gen_gk(k: int) -> EmbeddedGraph:
    """The counterexample family G^k on 3k+1 vertices."""
    if k < 1:
        raise GraphError("gen_gk needs k >= 1")
    A, B, C = 0, 1, 2

    def chain(i: int) -> int:  # 1-based chain vertex
        return 2 + i

    def lv(i: int) -> int:  # l_i, 1 <= i <= k-1
        return k + 2 + i

    def rv(i: int) -> int:
        return 2 * k + 1 + i

    n = 3 * k + 1
    rot: list[list[int]] = [[] for _ in range(n)]
    labels = ["A", "B", "C"] + [str(i) for i in range(1, k + 1)]
    labels += [f"l{i}" for i in range(1, k)] + [f"r{i}" for i in range(1, k)]

    rot[C] = [B, chain(1), A]
    ra = [C, chain(1)]
    for i in range(1, k):
        ra += [lv(i), chain(i + 1)]
    ra.append(B)
    rot[A] = ra
    rb = [A, chain(k)]
    for i in range(k - 1, 0, -1):
        rb += [rv(i), chain(i)]
    rb.append(C)
    rot[B] = rb
    for i in range(1, k + 1):
        r: list[int] = []
        r.append(C if i == 1 else chain(i - 1))
        if i > 1:
            r.append(rv(i - 1))
        r.append(B)
        if i < k:
            r += [rv(i), chain(i + 1), lv(i)]
        r.append(A)
        if i > 1:
            r.append(lv(i - 1))
        rot[chain(i)] = r
    for i in range(1, k):
        rot[lv(i)] = [chain(i), chain(i + 1), A]
        rot[rv(i)] = [B, chain(i + 1), chain(i)]

    return EmbeddedGraph(n, rot, (A, C, B), labels)


def gen_random_triangulation(n: int, seed: int) -> EmbeddedGraph:
    """Random stacked triangulation on n vertices, deterministic per seed."""
    if n < 3:
        raise GraphError("a triangulation needs at least 3 vertices")
    rng = random.Random(seed)
    rot: list[list[int]] = [[2, 1], [0, 2], [1, 0]]
    # bounded faces as ccw triangles
    faces: list[tuple[int, int, int]] = [(0, 1, 2)]
    for z in range(3, n):
        fi = rng.randrange(len(faces))
        a, b, c = faces[fi]
        rot.append([a, c, b])
        rot[a].insert(rot[a].index(c) + 1, z)
        rot[b].insert(rot[b].index(a) + 1, z)
        rot[c].insert(rot[c].index(b) + 1, z)
        faces[fi] = (a, b, z)
        faces.append((b, c, z))
        faces.append((c, a, z))
    return EmbeddedGraph(n, rot, (0, 2, 1))
