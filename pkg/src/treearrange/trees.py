"""Tree data structures: free trees, rooted trees, and linear arrangements.

Vertices are labelled 1..n throughout; positions in an arrangement are the
integers 1..n as well.  All structures are immutable after construction and
safe to share between threads.
"""

from __future__ import annotations

import itertools
from random import Random
from typing import Iterable, Iterator, Mapping, Sequence

# Enumerating labeled trees walks n**(n-2) label sequences; 9**7 ~ 4.8M is
# the largest population meant to run on desk hardware.
ENUMERATION_CEILING = 9


class FreeTree:
    """Undirected tree on vertices 1..n, stored as adjacency lists.

    Construction validates the input: exactly n-1 edges over labels 1..n,
    no self-loops, no duplicate edges, and connectivity (which, at n-1
    edges, also rules out cycles).  Neighbor lists keep the order in which
    the edges were supplied; any size-based ordering is applied later.
    """

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        edge_list = [(int(u), int(v)) for u, v in edges]
        if len(edge_list) != n - 1:
            raise ValueError(
                f"a tree on {n} vertices needs {n - 1} edges, got {len(edge_list)}"
            )
        adjacency: list[list[int]] = [[] for _ in range(n + 1)]
        seen: set[tuple[int, int]] = set()
        for u, v in edge_list:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} uses a label outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {{{key[0]},{key[1]}}}")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        self.n = n
        self.edges = edge_list
        self.adjacency = adjacency
        if self._count_reachable(1) != n:
            raise ValueError("edges do not form a connected tree")

    def _count_reachable(self, start: int) -> int:
        seen = bytearray(self.n + 1)
        seen[start] = 1
        stack = [start]
        count = 1
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"FreeTree(n={self.n}, edges={self.edges!r})"


class RootedTree:
    """A free tree with a distinguished root; edges point away from the root."""

    __slots__ = ("tree", "root", "parent")

    def __init__(self, tree: FreeTree, root: int):
        if not 1 <= root <= tree.n:
            raise ValueError(f"root {root} out of range 1..{tree.n}")
        # parent[v] = 0 marks the root; every other vertex gets exactly one
        # parent because the underlying graph is a validated tree.
        parent = [0] * (tree.n + 1)
        stack = [root]
        visited = bytearray(tree.n + 1)
        visited[root] = 1
        while stack:
            v = stack.pop()
            for w in tree.adjacency[v]:
                if not visited[w]:
                    visited[w] = 1
                    parent[w] = v
                    stack.append(w)
        self.tree = tree
        self.root = root
        self.parent = parent

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def edges(self) -> list[tuple[int, int]]:
        return self.tree.edges

    def children(self, v: int) -> list[int]:
        p = self.parent[v]
        return [w for w in self.tree.adjacency[v] if w != p]

    def __repr__(self) -> str:
        return f"RootedTree(root={self.root}, n={self.n})"


class Arrangement:
    """Bijection from vertices 1..n onto positions 1..n.

    Accepts either a sequence (item i is the position of vertex i+1) or a
    mapping from vertex to position.  Construction rejects anything that is
    not a bijection onto 1..n.
    """

    __slots__ = ("_pos",)

    def __init__(self, positions: Sequence[int] | Mapping[int, int]):
        if isinstance(positions, Mapping):
            n = len(positions)
            pos = [0] * (n + 1)
            for v, p in positions.items():
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} out of range 1..{n}")
                pos[v] = int(p)
        else:
            pos = [0]
            pos.extend(int(p) for p in positions)
            n = len(pos) - 1
        taken = bytearray(n + 1)
        for v in range(1, n + 1):
            p = pos[v]
            if not 1 <= p <= n:
                raise ValueError(f"vertex {v} mapped to position {p}, outside 1..{n}")
            if taken[p]:
                raise ValueError(f"position {p} assigned twice")
            taken[p] = 1
        self._pos = pos

    @property
    def n(self) -> int:
        return len(self._pos) - 1

    def __getitem__(self, vertex: int) -> int:
        return self._pos[vertex]

    def __len__(self) -> int:
        return self.n

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (vertex, position) pairs in vertex order."""
        for v in range(1, self.n + 1):
            yield v, self._pos[v]

    def to_list(self) -> list[int]:
        """Positions indexed by vertex - 1."""
        return self._pos[1:]

    def vertex_at(self, position: int) -> int:
        """Inverse lookup; O(n), intended for tests and rendering."""
        for v in range(1, self.n + 1):
            if self._pos[v] == position:
                return v
        raise ValueError(f"no vertex at position {position}")

    def mirrored(self) -> "Arrangement":
        """The reversed arrangement (position p becomes n + 1 - p)."""
        n = self.n
        return Arrangement([n + 1 - p for p in self._pos[1:]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self._pos == other._pos

    def __hash__(self) -> int:
        return hash(tuple(self._pos))

    def __repr__(self) -> str:
        return f"Arrangement({self._pos[1:]!r})"


def prufer_decode(sequence: Sequence[int]) -> FreeTree:
    """Decode a label sequence of length n-2 into the tree it encodes.

    Linear-time pointer scan: repeatedly join the smallest-labelled leaf to
    the next sequence entry.  Every sequence over 1..n decodes to a distinct
    labeled tree, which is what makes uniform generation and exhaustive
    enumeration possible.
    """
    n = len(sequence) + 2
    degree = [1] * (n + 1)
    for v in sequence:
        if not 1 <= v <= n:
            raise ValueError(f"sequence entry {v} outside 1..{n}")
        degree[v] += 1
    edges: list[tuple[int, int]] = []
    ptr = 1
    leaf = 0
    for v in sequence:
        if leaf == 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = 0
    if leaf == 0:
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
    edges.append((leaf, n))
    return FreeTree(n, edges)


def prufer_encode(tree: FreeTree) -> tuple[int, ...]:
    """Encode a tree (n >= 2) as its label sequence, the inverse of decode.

    Removes the smallest-labelled leaf n-2 times, recording its neighbor.
    """
    n = tree.n
    if n < 2:
        raise ValueError("label sequences are defined for n >= 2")
    degree = [0] + [len(tree.adjacency[v]) for v in range(1, n + 1)]
    alive = [set(tree.adjacency[v]) for v in range(n + 1)]
    out: list[int] = []
    ptr = 1
    leaf = 0
    for _ in range(n - 2):
        if leaf == 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
            ptr += 1
        neighbor = next(iter(alive[leaf]))
        out.append(neighbor)
        alive[neighbor].discard(leaf)
        degree[leaf] -= 1
        degree[neighbor] -= 1
        if degree[neighbor] == 1 and neighbor < ptr:
            leaf = neighbor
        else:
            leaf = 0
    return tuple(out)


def random_tree(n: int, seed: int) -> FreeTree:
    """Uniformly random labeled tree on n vertices; deterministic per seed."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if n == 1:
        return FreeTree(1, [])
    rng = Random(seed)
    return prufer_decode([rng.randint(1, n) for _ in range(n - 2)])


def enumerate_labeled_trees(n: int) -> Iterator[FreeTree]:
    """Yield every labeled tree on n vertices exactly once (n <= 9)."""
    if not 1 <= n <= ENUMERATION_CEILING:
        raise ValueError(
            f"enumeration supports 1 <= n <= {ENUMERATION_CEILING}, got {n}"
        )
    if n == 1:
        yield FreeTree(1, [])
        return
    for sequence in itertools.product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(sequence)


def path_tree(n: int) -> FreeTree:
    """The path 1-2-...-n; the worst case for traversal depth."""
    return FreeTree(n, [(i, i + 1) for i in range(1, n)])
