"""Optimal projective and planar arrangements via position intervals.

Instead of tracking displacements, each subtree is handed the exact block
of positions [a, b] it will occupy, with b - a + 1 equal to its vertex
count.  Children, taken in non-increasing size order, claim alternating
ends of the block, the first on the same side its parent occupies relative
to the grandparent; what remains after all children are placed is a single
slot, which the subtree's own root takes.  Every vertex is visited once and
does constant work per child, so the whole arrangement costs O(n).
"""

from __future__ import annotations

from .adjacency import (
    SortedAdjacency,
    find_centroid,
    free_sorted_adjacency,
    root_adjacency,
    rooted_sorted_adjacency,
)
from .trees import Arrangement, FreeTree, RootedTree


def arrange_subtree(
    adj: SortedAdjacency,
    subtree_root: int,
    on_right: bool,
    lo: int,
    hi: int,
    positions: list[int],
) -> None:
    """Assign positions[lo..hi] to the subtree hanging from `subtree_root`.

    `on_right` says which side of its parent the subtree occupies and picks
    the end of the interval its first (largest) child claims.  A child
    placed left takes the lowest free positions, one placed right the
    highest; the interval shrinks accordingly, and the final slot is the
    subtree root's own position.  Iterative, deepest frames first.
    """
    stack = [(subtree_root, on_right, lo, hi)]
    lists = adj.neighbors
    while stack:
        v, right_side, a, b = stack.pop()
        side = right_side
        for w, size in lists[v]:
            if side:
                stack.append((w, True, b - size + 1, b))
                b -= size
            else:
                stack.append((w, False, a, a + size - 1))
                a += size
            side = not side
        assert a == b, f"interval accounting drifted at vertex {v}: [{a},{b}]"
        positions[v] = a


def _arrange(adj: SortedAdjacency, root: int, n: int) -> Arrangement:
    positions = [0] * (n + 1)  # 0 = not yet assigned
    # Starting the root's first child on the right is an arbitrary but
    # fixed convention; the mirror image costs the same.
    arrange_subtree(adj, root, True, 1, n, positions)
    return Arrangement(positions[1:])


def optimal_projective(rooted: RootedTree) -> Arrangement:
    """Minimum-cost projective arrangement of a rooted tree, in O(n)."""
    return _arrange(rooted_sorted_adjacency(rooted), rooted.root, rooted.n)


def optimal_planar(tree: FreeTree) -> Arrangement:
    """Minimum-cost planar arrangement of a free tree, in O(n).

    Roots the size-sorted adjacency at a centroidal vertex and solves the
    projective problem there; the result is a planar optimum for the free
    tree.
    """
    adj = free_sorted_adjacency(tree)
    center = find_centroid(tree, adj)
    return _arrange(root_adjacency(adj, center), center, tree.n)
