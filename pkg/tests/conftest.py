"""Shared fixtures and independent little oracles used across the suite."""

from __future__ import annotations

import pytest

import treearrange as ta


# ----------------------------------------------------------------------------
# Reference trees
# ----------------------------------------------------------------------------

@pytest.fixture
def p3() -> ta.FreeTree:
    return ta.path_tree(3)


@pytest.fixture
def p4() -> ta.FreeTree:
    return ta.path_tree(4)


@pytest.fixture
def p5() -> ta.FreeTree:
    return ta.path_tree(5)


@pytest.fixture
def star5() -> ta.FreeTree:
    """Star with center 1 and leaves 2..5."""
    return ta.FreeTree(5, [(1, 2), (1, 3), (1, 4), (1, 5)])


@pytest.fixture
def spider() -> ta.FreeTree:
    """Five vertices: 1-2, 2-3, 2-4, 4-5; vertex 2 has degree three."""
    return ta.FreeTree(5, [(1, 2), (2, 3), (2, 4), (4, 5)])


@pytest.fixture
def separating_tree() -> ta.FreeTree:
    """The unique 6-vertex shape where one root choice worsens the optimum.

    Center 3 carries two legs of length two (3-2-1 and 3-5-6) and one leg of
    length one (3-4).  Rooting at vertex 4 forces projective cost 7 while the
    planar optimum is 6; every other root attains 6.
    """
    return ta.FreeTree(6, [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)])


SEPARATING_ROOT = 4


@pytest.fixture
def split_sizes_tree() -> ta.FreeTree:
    """Ten vertices where edge (1,2) splits 3|7 and edge (2,3) splits 5|5."""
    return ta.FreeTree(
        10,
        [(1, 4), (1, 5), (1, 2), (2, 6), (2, 3), (3, 7), (3, 8), (7, 9), (7, 10)],
    )


# ----------------------------------------------------------------------------
# Independent oracles
# ----------------------------------------------------------------------------

def component_size(tree: ta.FreeTree, u: int, v: int) -> int:
    """Vertices on v's side of edge {u,v}, counted by a flood fill that never
    steps on u.  Independent of the single-pass size computation."""
    seen = {v, u}
    stack = [v]
    count = 1
    while stack:
        x = stack.pop()
        for y in tree.adjacency[x]:
            if y not in seen:
                seen.add(y)
                count += 1
                stack.append(y)
    return count


def tree_key(tree: ta.FreeTree) -> tuple:
    """Label-respecting identity of a tree, ignoring edge order/orientation."""
    return tuple(sorted(tuple(sorted(e)) for e in tree.edges))
