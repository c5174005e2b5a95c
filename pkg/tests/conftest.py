"""Shared fixtures: the 17-node worked example and corpus helpers."""

from __future__ import annotations

import pytest

from hexcontact.tree import CappedBinaryTree


def fig5_tree() -> CappedBinaryTree:
    """The 17-node capped binary tree of the worked compaction example.

    Nodes are numbered 1..17 by inorder (stored 0-based); cap nesting is
    (1, 3, (4, (5, 7, (8, 10), 11), 12, 14), 15, 17).
    """
    n = 17
    left = [-1] * n
    right = [-1] * n

    def setc(p, l=None, r=None):
        if l is not None:
            left[p - 1] = l - 1
        if r is not None:
            right[p - 1] = r - 1

    setc(2, 1, 16)
    setc(16, 9, 17)
    setc(9, 6, 13)
    setc(6, 5, 8)
    setc(5, 4)
    setc(4, 3)
    setc(8, 7)
    setc(13, 10, 14)
    setc(10, r=11)
    setc(11, r=12)
    setc(14, r=15)
    caps = [[0, 2, 14, 16], [3, 11, 13], [4, 6, 10], [7, 9]]
    return CappedBinaryTree(root=1, left=left, right=right, cap_sets=caps)


# Final positions and cumulative shifts from the worked example, preorder.
FIG5_FINAL = [
    (2, 8, -8, 0), (1, 0, 0, 0), (16, 9, -7, 2), (9, 8, -6, 2), (6, 6, -4, 2),
    (5, 4, -2, 2), (4, 3, -1, 2), (3, 2, 0, 2), (8, 7, -3, 6), (7, 6, -2, 6),
    (13, 10, -4, 11), (10, 9, -3, 11), (11, 10, -2, 11), (12, 11, -1, 11),
    (14, 13, -1, 14), (15, 14, 0, 14), (17, 16, 0, 16),
]

FIG5_FRONTS = [
    (1, 3, 15, 17), (4, 12, 14), (5, 7, 11), (8, 10), (6, 13), (9,), (16,), (2,),
]

FIG5_ROUNDS = [
    # (placed rows (node, x, y, h), shift rows (node, shift))
    ([(1, 0, 0, 0), (3, 0, 0, 0), (15, 0, 0, 0), (17, 0, 0, 0)], []),
    ([(4, 1, -1, 1), (12, 0, -1, 1), (14, -1, -1, 1)], []),
    ([(5, 2, -2, 2), (7, 0, -2, 2), (11, -1, -2, 2)], []),
    ([(8, 1, -3, 3), (10, -2, -3, 3)], []),
    ([(6, 4, -4, None), (13, -1, -4, None)], [(8, 4), (14, 3)]),
    ([(9, 6, -6, None)], [(13, 9)]),
    ([(16, 7, -7, None)], [(17, 14)]),
    ([(2, 8, -8, None)], [(16, 2)]),
]


@pytest.fixture
def fig5():
    return fig5_tree()


def corpus_sizes(count: int = 1000, max_n: int = 2000) -> list[int]:
    """Deterministic spread of sizes over [3, max_n], small-heavy."""
    sizes = []
    for i in range(count):
        if i < count - 150:
            sizes.append(3 + (i % 118))
        elif i < count - 50:
            sizes.append(150 + (i * 37) % 851)
        else:
            sizes.append(1000 + (i * 101) % (max_n - 1000 + 1))
    sizes[-1] = max_n
    return sizes
