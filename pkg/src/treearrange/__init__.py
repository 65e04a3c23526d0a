"""Minimum-cost linear arrangements of trees in linear time.

A linear arrangement places a tree's vertices on the integers 1..n; its
cost is the total edge length.  This package computes minimum-cost
arrangements under two constraints:

* planar: no two edges cross when drawn as arcs above the line
  (one-page book embedding), for free trees;
* projective: planar and with the root covered by no edge, for rooted
  trees.

Two independent O(n) algorithms are provided for each task, one based on
displacement tables and one based on position intervals, along with
brute-force oracles that certify them on small instances and a CLI.
"""

from __future__ import annotations

from . import displacement, intervals
from .adjacency import (
    SortedAdjacency,
    directional_sizes,
    find_centroid,
    free_sorted_adjacency,
    root_adjacency,
    rooted_sorted_adjacency,
    rooted_subtree_sizes,
    sorted_adjacency,
)
from .metrics import (
    EdgeCrossing,
    cost,
    covering_edge,
    find_crossing,
    find_crossing_linear,
    is_planar,
    is_projective,
)
from .oracle import (
    ExhaustiveProfile,
    OracleResult,
    brute_force_centroids,
    brute_force_min,
    canonical_form,
    exhaustive_profile,
    find_separating_trees,
)
from .svg import render_svg
from .trees import (
    Arrangement,
    FreeTree,
    RootedTree,
    enumerate_labeled_trees,
    path_tree,
    prufer_decode,
    prufer_encode,
    random_tree,
)

_SOLVERS = {"hs": displacement, "intervals": intervals}


def min_projective_arrangement(
    rooted: RootedTree, algorithm: str = "intervals"
) -> Arrangement:
    """Minimum-cost projective arrangement; algorithm is "hs" or "intervals"."""
    return _solver(algorithm).optimal_projective(rooted)


def min_planar_arrangement(tree: FreeTree, algorithm: str = "intervals") -> Arrangement:
    """Minimum-cost planar arrangement; algorithm is "hs" or "intervals"."""
    return _solver(algorithm).optimal_planar(tree)


def _solver(algorithm: str):
    try:
        return _SOLVERS[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}, expected one of {tuple(_SOLVERS)}"
        ) from None


__all__ = [
    "Arrangement",
    "EdgeCrossing",
    "ExhaustiveProfile",
    "FreeTree",
    "OracleResult",
    "RootedTree",
    "SortedAdjacency",
    "brute_force_centroids",
    "brute_force_min",
    "canonical_form",
    "cost",
    "covering_edge",
    "directional_sizes",
    "displacement",
    "enumerate_labeled_trees",
    "exhaustive_profile",
    "find_centroid",
    "find_crossing",
    "find_crossing_linear",
    "find_separating_trees",
    "free_sorted_adjacency",
    "intervals",
    "is_planar",
    "is_projective",
    "min_planar_arrangement",
    "min_projective_arrangement",
    "path_tree",
    "prufer_decode",
    "prufer_encode",
    "random_tree",
    "render_svg",
    "root_adjacency",
    "rooted_sorted_adjacency",
    "rooted_subtree_sizes",
    "sorted_adjacency",
]
