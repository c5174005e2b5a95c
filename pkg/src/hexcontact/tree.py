"""Capped binary trees: the combinatorial output of region carving.

A capped binary tree is a binary tree in which every node either has two
children (proper) or belongs to exactly one cap set.  A cap set is an
inorder-ordered group of nodes standing for one horizontal chain of the
drawing: its first member has only a left child, its last only a right
child, and the middle members are leaves; the outermost set's first and
last members are leaves as well.  Cap sets never overlap, and a nested
set sits strictly between two consecutive members of its enclosing set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import ValidationReport


@dataclass
class CappedBinaryTree:
    root: int
    left: list[int]   # child id or -1
    right: list[int]
    cap_sets: list[list[int]] = field(default_factory=list)

    @property
    def n_nodes(self) -> int:
        return len(self.left)

    def parents(self) -> list[int]:
        par = [-1] * self.n_nodes
        for i in range(self.n_nodes):
            for c in (self.left[i], self.right[i]):
                if c != -1:
                    par[c] = i
        return par

    def inorder(self) -> list[int]:
        """Node ids in inorder, iteratively (trees can be deep)."""
        out: list[int] = []
        stack: list[int] = []
        cur = self.root
        while stack or cur != -1:
            while cur != -1:
                stack.append(cur)
                cur = self.left[cur]
            cur = stack.pop()
            out.append(cur)
            cur = self.right[cur]
        return out

    def cap_index(self) -> list[int]:
        """cap_index[node] = id of its cap set, or -1."""
        idx = [-1] * self.n_nodes
        for c, members in enumerate(self.cap_sets):
            for x in members:
                idx[x] = c
        return idx

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        nodes = []
        for i in range(self.n_nodes):
            entry: dict = {"id": i}
            if self.left[i] != -1:
                entry["left"] = self.left[i]
            if self.right[i] != -1:
                entry["right"] = self.right[i]
            nodes.append(entry)
        return {"root": self.root, "nodes": nodes, "cap_sets": [list(c) for c in self.cap_sets]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "CappedBinaryTree":
        n = len(d["nodes"])
        left = [-1] * n
        right = [-1] * n
        for entry in d["nodes"]:
            i = entry["id"]
            left[i] = entry.get("left", -1)
            right[i] = entry.get("right", -1)
        return cls(d["root"], left, right, [list(c) for c in d["cap_sets"]])


def validate_tree(t: CappedBinaryTree) -> ValidationReport:
    """Check all five capped-binary-tree invariants structurally."""
    rep = ValidationReport()
    n = t.n_nodes
    if n == 0:
        rep.add("empty tree")
        return rep
    if not (0 <= t.root < n):
        rep.add("root out of range")
        return rep

    seen = [False] * n
    stack = [t.root]
    count = 0
    while stack:
        i = stack.pop()
        if seen[i]:
            rep.add(f"node {i} reached twice (not a tree)")
            return rep
        seen[i] = True
        count += 1
        for c in (t.left[i], t.right[i]):
            if c != -1:
                if not (0 <= c < n):
                    rep.add(f"node {i} has out-of-range child {c}")
                    return rep
                stack.append(c)
    if count != n:
        rep.add(f"only {count} of {n} nodes reachable from the root")
        return rep

    ino = t.inorder()
    ipos = [0] * n
    for k, x in enumerate(ino):
        ipos[x] = k

    cap_of = t.cap_index()
    counted = sum(len(c) for c in t.cap_sets)
    if counted != sum(1 for x in range(n) if cap_of[x] != -1):
        rep.add("a node belongs to more than one cap set")

    # proper-or-capped
    for i in range(n):
        nchild = (t.left[i] != -1) + (t.right[i] != -1)
        if nchild == 2:
            if cap_of[i] != -1:
                rep.add(f"proper node {i} belongs to a cap set")
        else:
            if cap_of[i] == -1:
                rep.add(f"node {i} has {nchild} children but no cap set")
    if rep.problems:
        return rep

    if not t.cap_sets:
        rep.add("tree has no cap sets")
        return rep

    # identify the outermost set: the one whose members are not enclosed
    spans = []
    for c, members in enumerate(t.cap_sets):
        ks = [ipos[x] for x in members]
        if ks != sorted(ks):
            rep.add(f"cap set {c} is not in inorder order")
            return rep
        spans.append((ks[0], ks[-1], c))
    spans.sort()
    outermost = min(spans, key=lambda s: (s[0], -s[1]))[2]
    if spans[0][2] != outermost or spans[0][1] != max(s[1] for s in spans):
        rep.add("outermost cap set does not span the whole inorder range")

    for c, members in enumerate(t.cap_sets):
        first, last = members[0], members[-1]
        mids = members[1:-1]
        if len(members) == 1:
            if n != 1:
                rep.add(f"cap set {c} has a single member in a multi-node tree")
            continue
        if c == outermost:
            if t.left[first] != -1 or t.right[first] != -1:
                rep.add(f"outermost cap first node {first} is not a leaf")
            if t.left[last] != -1 or t.right[last] != -1:
                rep.add(f"outermost cap last node {last} is not a leaf")
        else:
            if not (t.left[first] != -1 and t.right[first] == -1):
                rep.add(f"cap set {c} first node {first} must have exactly a left child")
            if not (t.right[last] != -1 and t.left[last] == -1):
                rep.add(f"cap set {c} last node {last} must have exactly a right child")
        for x in mids:
            if t.left[x] != -1 or t.right[x] != -1:
                rep.add(f"cap set {c} middle node {x} is not a leaf")

    # nesting: sweep spans sorted by (lo, -hi); each non-outermost set must
    # nest strictly inside its stack parent, between two consecutive members
    import bisect

    member_pos = {c: sorted(ipos[x] for x in t.cap_sets[c]) for c in range(len(t.cap_sets))}
    spans.sort(key=lambda s: (s[0], -s[1]))
    stack2: list[tuple[int, int, int]] = []
    for lo, hi, c in spans:
        while stack2 and stack2[-1][1] < lo:
            stack2.pop()
        if stack2:
            plo, phi, pc = stack2[-1]
            if not (plo < lo and hi < phi):
                rep.add(f"cap sets {c} and {pc} overlap without nesting")
                return rep
            ks = member_pos[pc]
            j = bisect.bisect_left(ks, lo)
            if j == 0 or j == len(ks) or not (ks[j - 1] < lo and hi < ks[j]):
                rep.add(
                    f"cap set {c} does not sit between consecutive members of set {pc}"
                )
        elif c != outermost:
            rep.add(f"cap set {c} is not nested in any other set")
        stack2.append((lo, hi, c))

    # horizontal-edge count: tree plus cap chains is 3-regular except at the
    # root and the two extreme leaves, forcing (n-1)/2 horizontal edges
    if n > 1:
        horizontal = sum(len(c) - 1 for c in t.cap_sets)
        if 2 * horizontal != n - 1:
            rep.add(
                f"cap pairs {horizontal} != (n-1)/2 = {(n - 1) / 2}: "
                "capped structure is not 3-regular"
            )
    return rep


def tree_canonical_key(t: CappedBinaryTree) -> tuple:
    """Relabel nodes by inorder index; equal keys mean isomorphic trees
    (isomorphism preserving inorder positions and cap sets)."""
    ino = t.inorder()
    ipos = [0] * t.n_nodes
    for k, x in enumerate(ino):
        ipos[x] = k

    def m(x: int) -> int:
        return ipos[x] if x != -1 else -1

    left = tuple(m(t.left[x]) for x in ino)
    right = tuple(m(t.right[x]) for x in ino)
    caps = tuple(sorted(tuple(ipos[x] for x in c) for c in t.cap_sets))
    return (ipos[t.root], left, right, caps)
