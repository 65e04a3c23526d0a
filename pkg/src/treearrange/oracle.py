"""Exhaustive ground truth for small trees.

`brute_force_min` scans every one of the n! arrangements in lexicographic
order with no pruning; it is meant to be obviously correct, not fast, and
certifies the linear-time algorithms on small instances.  `exhaustive_profile`
performs the same scan batched through numpy so that whole test populations
(thousands of trees at n = 7, 8) stay affordable; the two are cross-checked
against each other in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .metrics import cost, covering_edge, find_crossing
from .trees import Arrangement, FreeTree, RootedTree, enumerate_labeled_trees

REGIMES = ("unrestricted", "planar", "projective")

# 9! = 362,880 arrangements per call is the intended desk-scale limit.
BRUTE_FORCE_CEILING = 9

_PERM_ROWS: dict[int, np.ndarray] = {}


@dataclass
class OracleResult:
    min_cost: int
    witness: Arrangement
    regime: str


@dataclass
class ExhaustiveProfile:
    """Minimum costs of one tree under every regime and every root."""

    unrestricted_min: int
    planar_min: int
    projective_min: dict[int, int]  # root -> minimum projective cost


def brute_force_min(
    tree: Union[FreeTree, RootedTree],
    regime: str,
    root: Optional[int] = None,
) -> OracleResult:
    """Minimum cost and first lexicographic witness under the given regime.

    The projective regime needs a root: pass a RootedTree, or a FreeTree
    plus `root`.  Filtering uses the pairwise crossing scan, keeping this
    path independent of the linear-time machinery it certifies.
    """
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}, expected one of {REGIMES}")
    if isinstance(tree, RootedTree):
        free, rooted = tree.tree, tree
    else:
        free = tree
        rooted = None
        if root is not None:
            rooted = RootedTree(free, root)
    if regime == "projective" and rooted is None:
        raise ValueError("projective regime needs a rooted tree or a root")
    n = free.n
    if n > BRUTE_FORCE_CEILING:
        raise ValueError(f"brute force supports n <= {BRUTE_FORCE_CEILING}, got {n}")

    best_cost: Optional[int] = None
    best: Optional[Arrangement] = None
    for perm in itertools.permutations(range(1, n + 1)):
        arr = Arrangement(perm)
        if regime != "unrestricted" and find_crossing(free, arr) is not None:
            continue
        if regime == "projective" and covering_edge(rooted, arr) is not None:
            continue
        c = cost(free, arr)
        if best_cost is None or c < best_cost:
            best_cost = c
            best = arr
    assert best is not None and best_cost is not None  # every regime is satisfiable
    return OracleResult(min_cost=best_cost, witness=best, regime=regime)


def _permutation_rows(n: int) -> np.ndarray:
    """All n! position assignments, one row per arrangement, lexicographic."""
    rows = _PERM_ROWS.get(n)
    if rows is None:
        rows = np.array(
            list(itertools.permutations(range(1, n + 1))), dtype=np.int16
        )
        _PERM_ROWS[n] = rows
    return rows


def exhaustive_profile(tree: FreeTree) -> ExhaustiveProfile:
    """Scan all n! arrangements once and read off every regime's minimum.

    Column v-1 of the permutation table holds the position of vertex v, so
    each cost, crossing and covering test becomes a vectorized pass over
    all arrangements at once.  Semantically identical to brute_force_min;
    the test suite asserts the agreement.
    """
    n = tree.n
    if n > BRUTE_FORCE_CEILING:
        raise ValueError(f"brute force supports n <= {BRUTE_FORCE_CEILING}, got {n}")
    rows = _permutation_rows(n)
    total = rows.shape[0]

    spans = []
    costs = np.zeros(total, dtype=np.int32)
    for u, v in tree.edges:
        pu = rows[:, u - 1]
        pv = rows[:, v - 1]
        lo = np.minimum(pu, pv)
        hi = np.maximum(pu, pv)
        spans.append((lo, hi))
        costs += hi - lo

    planar = np.ones(total, dtype=bool)
    for i in range(len(spans)):
        lo_i, hi_i = spans[i]
        for j in range(i + 1, len(spans)):
            lo_j, hi_j = spans[j]
            crossing = ((lo_i < lo_j) & (lo_j < hi_i) & (hi_i < hi_j)) | (
                (lo_j < lo_i) & (lo_i < hi_j) & (hi_j < hi_i)
            )
            planar &= ~crossing

    projective_min: dict[int, int] = {}
    for root in range(1, n + 1):
        root_pos = rows[:, root - 1]
        uncovered = planar.copy()
        for lo, hi in spans:
            uncovered &= ~((lo < root_pos) & (root_pos < hi))
        projective_min[root] = int(costs[uncovered].min())

    return ExhaustiveProfile(
        unrestricted_min=int(costs.min()),
        planar_min=int(costs[planar].min()),
        projective_min=projective_min,
    )


def brute_force_centroids(tree: FreeTree) -> list[int]:
    """Vertices minimizing the size of their largest hanging subtree.

    Quadratic by design: deletes each vertex in turn and measures the
    components directly, independent of the directional-size machinery.
    """
    n = tree.n
    if n == 1:
        return [1]
    weight = {}
    for v in range(1, n + 1):
        largest = 0
        seen = bytearray(n + 1)
        seen[v] = 1
        for w in tree.adjacency[v]:
            if seen[w]:
                continue
            count = 0
            stack = [w]
            seen[w] = 1
            while stack:
                x = stack.pop()
                count += 1
                for y in tree.adjacency[x]:
                    if not seen[y] and y != v:
                        seen[y] = 1
                        stack.append(y)
            largest = max(largest, count)
        weight[v] = largest
    best = min(weight.values())
    return [v for v in range(1, n + 1) if weight[v] == best]


def canonical_form(tree: FreeTree) -> str:
    """Isomorphism-invariant encoding: canonical rooted form at the centroid.

    Subtree encodings are sorted at every vertex so label order cannot leak
    in; a two-centroid tree takes the smaller of its two encodings.
    """

    def encode(v: int, parent: int) -> str:
        parts = sorted(
            encode(w, v) for w in tree.adjacency[v] if w != parent
        )
        return "(" + "".join(parts) + ")"

    return min(encode(c, 0) for c in brute_force_centroids(tree))


def find_separating_trees(n: int) -> list[tuple[FreeTree, int]]:
    """All (tree, root) pairs, one tree per isomorphism class, where rooting
    strictly worsens the optimum: minimum projective cost > minimum planar cost.

    Settles empirically, rather than assuming, which is the smallest tree
    exhibiting the gap.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"separating-tree search supports 1 <= n <= 7, got {n}")
    seen: set[str] = set()
    results: list[tuple[FreeTree, int]] = []
    for tree in enumerate_labeled_trees(n):
        key = canonical_form(tree)
        if key in seen:
            continue
        seen.add(key)
        profile = exhaustive_profile(tree)
        for root in range(1, n + 1):
            if profile.projective_min[root] > profile.planar_min:
                results.append((tree, root))
    return results
