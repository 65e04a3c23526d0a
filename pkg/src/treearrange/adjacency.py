"""Directional subtree sizes and size-sorted adjacency lists.

Cutting an edge {u,v} splits a tree into two parts; the directional size of
(u,v) is the number of vertices on v's side, so the two directions of one
edge always sum to n.  Per-vertex neighbor lists sorted by these sizes in
non-increasing order drive both arrangement algorithms and the centroid
search.  A single counting sort keeps the whole construction linear.

Tie handling is deterministic everywhere: triples are emitted in the order
edges are discovered by a depth-first walk (from vertex 1 for free trees,
from the root for rooted trees, neighbors in construction order), and the
counting sort is stable.  Any order among equal sizes yields an optimal
arrangement; fixing one makes outputs reproducible.

All traversals use explicit stacks so path-shaped trees with millions of
vertices cannot overflow the interpreter's recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import FreeTree, RootedTree

SizeTriple = tuple[int, int, int]  # (u, v, vertices on v's side of edge {u,v})


@dataclass
class SortedAdjacency:
    """Per-vertex (neighbor, size) lists, each non-increasing by size.

    In free form, vertex u lists all its neighbors; in rooted form only its
    children, the entry toward the root having been removed.
    """

    neighbors: list[list[tuple[int, int]]]  # index 0 unused
    rooted: bool

    @property
    def n(self) -> int:
        return len(self.neighbors) - 1


def _walk(adjacency: list[list[int]], start: int) -> tuple[list[int], list[int]]:
    """Iterative DFS: (preorder vertex list, parent array).

    Neighbors are pushed reversed so they are visited in construction order;
    the preorder therefore discovers edges in a fixed, reproducible order.
    """
    n = len(adjacency) - 1
    parent = [0] * (n + 1)
    visited = bytearray(n + 1)
    visited[start] = 1
    order: list[int] = []
    stack = [start]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in reversed(adjacency[v]):
            if not visited[w]:
                visited[w] = 1
                parent[w] = v
                stack.append(w)
    return order, parent


def directional_sizes(tree: FreeTree) -> list[SizeTriple]:
    """Both directed sizes of every edge, 2(n-1) triples in one linear pass.

    A depth-first walk from vertex 1 orients each edge parent-to-child; the
    subtree counts accumulated on the way back up give the child-side sizes
    and n minus them the parent-side sizes.
    """
    n = tree.n
    order, parent = _walk(tree.adjacency, 1)
    size = [1] * (n + 1)
    for v in reversed(order):
        if v != 1:
            size[parent[v]] += size[v]
    triples: list[SizeTriple] = []
    for v in order:
        if v == 1:
            continue
        u = parent[v]
        s = size[v]
        triples.append((u, v, s))
        triples.append((v, u, n - s))
    return triples


def rooted_subtree_sizes(rooted: RootedTree) -> list[SizeTriple]:
    """One (parent, child, subtree size) triple per edge directed off the root."""
    n = rooted.n
    order, parent = _walk(rooted.tree.adjacency, rooted.root)
    size = [1] * (n + 1)
    root = rooted.root
    for v in reversed(order):
        if v != root:
            size[parent[v]] += size[v]
    return [(parent[v], v, size[v]) for v in order if v != root]


def sorted_adjacency(
    triples: list[SizeTriple], n: int, *, rooted: bool
) -> SortedAdjacency:
    """Deal size triples into per-vertex lists, largest size first.

    One counting sort over the bucket range 1..n-1 shared by all vertices;
    stability preserves the triple emission order among equal sizes.
    """
    buckets: list[list[SizeTriple]] = [[] for _ in range(n + 1)]
    for triple in triples:
        buckets[triple[2]].append(triple)
    lists: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for s in range(n - 1, 0, -1):
        for u, v, size in buckets[s]:
            lists[u].append((v, size))
    return SortedAdjacency(neighbors=lists, rooted=rooted)


def free_sorted_adjacency(tree: FreeTree) -> SortedAdjacency:
    """Size-sorted lists of a free tree, both directions of every edge."""
    return sorted_adjacency(directional_sizes(tree), tree.n, rooted=False)


def rooted_sorted_adjacency(rooted: RootedTree) -> SortedAdjacency:
    """Size-sorted children lists of a rooted tree."""
    return sorted_adjacency(rooted_subtree_sizes(rooted), rooted.n, rooted=True)


def root_adjacency(adj: SortedAdjacency, root: int) -> SortedAdjacency:
    """Re-root a free-form structure: drop each non-root vertex's entry that
    points toward the root, keeping the surviving order (still sorted)."""
    if adj.rooted:
        raise ValueError("adjacency is already rooted")
    n = adj.n
    parent = [0] * (n + 1)
    visited = bytearray(n + 1)
    visited[root] = 1
    stack = [root]
    while stack:
        v = stack.pop()
        for w, _ in adj.neighbors[v]:
            if not visited[w]:
                visited[w] = 1
                parent[w] = v
                stack.append(w)
    lists: list[list[tuple[int, int]]] = [[]]
    for v in range(1, n + 1):
        p = parent[v]
        if v == root:
            lists.append(list(adj.neighbors[v]))
        else:
            lists.append([entry for entry in adj.neighbors[v] if entry[0] != p])
    return SortedAdjacency(neighbors=lists, rooted=True)


def find_centroid(tree: FreeTree, adj: SortedAdjacency | None = None) -> int:
    """A centroidal vertex: its largest hanging subtree has at most n/2 vertices.

    Starting from vertex 1, hop to the neighbor whose side holds more than
    half the tree (the head of the sorted list, read in O(1)); the first
    vertex with no such neighbor is centroidal.  Each hop moves to a
    strictly smaller far side, so no vertex repeats and the walk ends
    within n steps.
    """
    if adj is None:
        adj = free_sorted_adjacency(tree)
    if adj.rooted:
        raise ValueError("centroid search needs the free-form adjacency")
    n = tree.n
    u = 1
    while True:
        entries = adj.neighbors[u]
        if not entries:
            return u  # single vertex
        v, s = entries[0]
        if 2 * s > n:
            u = v
        else:
            return u
