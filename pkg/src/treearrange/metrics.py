"""Arrangement cost and the crossing / covering predicates.

Two edges cross when their position spans strictly interleave; a vertex is
covered by an edge when its position falls strictly inside the edge's span.
A planar arrangement has no crossings; a projective arrangement of a rooted
tree is planar with an uncovered root.

Two crossing detectors are provided: a pairwise scan, quadratic in the edge
count and kept deliberately naive so it can serve as ground truth, and a
linear stack-based check for large inputs.  They must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .trees import Arrangement, FreeTree, RootedTree

Edge = tuple[int, int]
AnyTree = Union[FreeTree, RootedTree]


@dataclass(frozen=True)
class EdgeCrossing:
    """A witness pair of crossing edges; `first` opens at the leftmost position."""

    first: Edge
    second: Edge


def cost(tree: AnyTree, arr: Arrangement) -> int:
    """Sum of |position(u) - position(v)| over the tree's edges."""
    _check_sizes(tree, arr)
    return sum(abs(arr[u] - arr[v]) for u, v in tree.edges)


def find_crossing(tree: AnyTree, arr: Arrangement) -> Optional[EdgeCrossing]:
    """First crossing under a pairwise scan in input edge order, or None.

    Quadratic in the number of edges; the obviously-correct reference that
    the linear check and the arrangement algorithms are tested against.
    """
    _check_sizes(tree, arr)
    edges = tree.edges
    spans = [(min(arr[u], arr[v]), max(arr[u], arr[v])) for u, v in edges]
    for i in range(len(edges)):
        lo_i, hi_i = spans[i]
        for j in range(i + 1, len(edges)):
            lo_j, hi_j = spans[j]
            if lo_i < lo_j < hi_i < hi_j:
                return EdgeCrossing(first=edges[i], second=edges[j])
            if lo_j < lo_i < hi_j < hi_i:
                return EdgeCrossing(first=edges[j], second=edges[i])
    return None


def find_crossing_linear(tree: AnyTree, arr: Arrangement) -> Optional[EdgeCrossing]:
    """First crossing found by a left-to-right sweep with a stack, or None.

    Edges behave like parentheses in a planar arrangement: sweep positions
    1..n, push an edge when its left endpoint is passed, pop when its right
    endpoint is reached.  A pop that does not match the top of the stack
    exhibits two strictly interleaving spans.  Bucketing replaces sorting,
    so the whole check is O(n).
    """
    _check_sizes(tree, arr)
    n = tree.n
    # open_at[p]: edges whose span starts at p, farthest-closing first, so
    # the earliest-closing edge ends up on top of the stack.
    # close_at[p]: edges whose span ends at p, latest-opening first, which
    # is the only pop order a crossing-free arrangement can satisfy.
    by_hi: list[list[tuple[int, Edge]]] = [[] for _ in range(n + 1)]
    by_lo: list[list[tuple[int, Edge]]] = [[] for _ in range(n + 1)]
    for u, v in tree.edges:
        pu, pv = arr[u], arr[v]
        lo, hi = (pu, pv) if pu < pv else (pv, pu)
        by_hi[hi].append((lo, (u, v)))
        by_lo[lo].append((hi, (u, v)))
    open_at: list[list[tuple[int, int, Edge]]] = [[] for _ in range(n + 1)]
    close_at: list[list[tuple[int, int, Edge]]] = [[] for _ in range(n + 1)]
    for hi in range(n, 0, -1):
        for lo, edge in by_hi[hi]:
            open_at[lo].append((lo, hi, edge))
    for lo in range(n, 0, -1):
        for hi, edge in by_lo[lo]:
            close_at[hi].append((lo, hi, edge))

    stack: list[tuple[int, int, Edge]] = []
    for p in range(1, n + 1):
        for lo, hi, edge in close_at[p]:
            top = stack[-1]
            if top[2] == edge:
                stack.pop()
            else:
                # `edge` opened before `top` yet closes first, so their spans
                # strictly interleave: lo(edge) < lo(top) < p < hi(top).
                return EdgeCrossing(first=edge, second=top[2])
        for item in open_at[p]:
            stack.append(item)
    return None


def is_planar(tree: AnyTree, arr: Arrangement) -> bool:
    """True when no two edges cross."""
    return find_crossing_linear(tree, arr) is None


def covering_edge(rooted: RootedTree, arr: Arrangement) -> Optional[Edge]:
    """First edge (input order) whose span strictly contains the root, or None."""
    _check_sizes(rooted, arr)
    root_pos = arr[rooted.root]
    for u, v in rooted.edges:
        pu, pv = arr[u], arr[v]
        if pu < root_pos < pv or pv < root_pos < pu:
            return (u, v)
    return None


def is_projective(rooted: RootedTree, arr: Arrangement) -> bool:
    """True when the arrangement is planar and nothing covers the root."""
    return is_planar(rooted, arr) and covering_edge(rooted, arr) is None


def _check_sizes(tree: AnyTree, arr: Arrangement) -> None:
    if tree.n != arr.n:
        raise ValueError(
            f"arrangement covers {arr.n} vertices, tree has {tree.n}"
        )
