"""Optimal projective and planar arrangements via displacement tables.

Every vertex receives a signed offset from the root's eventual position.
An optimal arrangement places each vertex's child subtrees on alternating
sides in non-increasing size order, nested inward: children ranked 2, 4, ...
end up between the vertex and its parent, children ranked 1, 3, ... beyond
it, with the largest outermost.  A branch's offset therefore equals the
offset of the last slot taken on the parent's side, plus one more than the
total size of the even-ranked children sitting in between.  Skipping that
between-children term is exactly what makes a displacement table collide;
with it, the offsets shifted by the root's position tile 1..n.

The root itself is uncovered: its own children simply alternate sides,
largest to the left here, and its position is one past the vertices placed
to its left.
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


def embed_branch(
    adj: SortedAdjacency,
    branch_root: int,
    base: int,
    direction: int,
    offsets: list[int],
) -> None:
    """Fill `offsets` for a branch and all its descendants.

    `direction` is +1 when the branch lies to the right of its parent and
    -1 when to the left; `base` is the offset of the boundary slot adjacent
    to the parent.  Iterative so path-shaped branches of any depth work.
    """
    stack = [(branch_root, base, direction)]
    lists = adj.neighbors
    while stack:
        v, v_base, v_dir = stack.pop()
        children = lists[v]
        between = 0  # total size of the even-ranked (2nd, 4th, ...) children
        for i in range(1, len(children), 2):
            between += children[i][1]
        pos = v_base + v_dir * (between + 1)
        offsets[v] = pos
        # Walk ranks k..1; even ranks fill the gap toward the parent
        # (opposite direction), odd ranks stack outward beyond v.
        inner = outer = 0
        for i in range(len(children) - 1, -1, -1):
            w, size = children[i]
            if (i + 1) % 2 == 0:
                stack.append((w, pos - v_dir * inner, -v_dir))
                inner += size
            else:
                stack.append((w, pos + v_dir * outer, v_dir))
                outer += size


def _arrange(adj: SortedAdjacency, root: int, n: int) -> Arrangement:
    """Drive embed_branch over the root's children and translate offsets.

    Children are taken smallest to largest, alternating sides so that the
    odd-ranked (eventually the largest) land on the left; the root then
    sits one past everything placed to its left.
    """
    offsets = [0] * (n + 1)
    children = adj.neighbors[root]
    left_total = right_total = 0
    for i in range(len(children) - 1, -1, -1):
        v, size = children[i]
        if (i + 1) % 2 == 0:
            embed_branch(adj, v, right_total, +1, offsets)
            right_total += size
        else:
            embed_branch(adj, v, -left_total, -1, offsets)
            left_total += size
    offsets[root] = 0
    root_pos = left_total + 1
    return Arrangement([root_pos + offsets[v] for v in range(1, n + 1)])


def optimal_projective(rooted: RootedTree) -> Arrangement:
    """Minimum-cost projective arrangement of a rooted tree, in O(n)."""
    return _arrange(rooted_sorted_adjacency(rooted), rooted.root, rooted.n)


def optimal_planar(tree: FreeTree) -> Arrangement:
    """Minimum-cost planar arrangement of a free tree, in O(n).

    Rooting at a centroidal vertex makes the planar optimum coincide with
    the projective optimum of the rooted tree, so the displacement pass can
    be reused unchanged.
    """
    adj = free_sorted_adjacency(tree)
    center = find_centroid(tree, adj)
    return _arrange(root_adjacency(adj, center), center, tree.n)
