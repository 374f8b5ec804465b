"""Directed-acyclic and undirected graph primitives.

Vertices are dense 0-based indices; labels are metadata only, so matrix rows
and columns always align with vertex order. All types are immutable after
construction and every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np


def is_acyclic(num_vertices: int, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the directed edge set admits a topological order (Kahn)."""
    succ: list[list[int]] = [[] for _ in range(num_vertices)]
    indeg = [0] * num_vertices
    for i, j in edges:
        succ[i].append(j)
        indeg[j] += 1
    queue = deque(v for v in range(num_vertices) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == num_vertices


class WeightedDag:
    """A weighted DAG: labeled vertices and directed edges with nonzero weights.

    Acyclicity is enforced at construction; a zero weight means "no edge", so
    zero-weight edges are rejected rather than silently dropped.
    """

    def __init__(self, vertex_labels: Sequence[str], edges: Mapping[tuple[int, int], float]):
        labels = tuple(str(v) for v in vertex_labels)
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be distinct")
        n = len(labels)
        checked: dict[tuple[int, int], float] = {}
        for (i, j), beta in edges.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
            if i == j:
                raise ValueError(f"self-edge at vertex {i}")
            if beta == 0:
                raise ValueError(f"edge ({i}, {j}) has zero weight")
            checked[(i, j)] = float(beta)
        if not is_acyclic(n, checked):
            raise ValueError("edge set contains a directed cycle")
        self._labels = labels
        self._edges = checked
        self._parents: list[frozenset[int]] = [frozenset() for _ in range(n)]
        self._children: list[frozenset[int]] = [frozenset() for _ in range(n)]
        pa: list[set[int]] = [set() for _ in range(n)]
        ch: list[set[int]] = [set() for _ in range(n)]
        for (i, j) in checked:
            pa[j].add(i)
            ch[i].add(j)
        self._parents = [frozenset(s) for s in pa]
        self._children = [frozenset(s) for s in ch]

    @property
    def num_vertices(self) -> int:
        return len(self._labels)

    @property
    def vertex_labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def edges(self) -> dict[tuple[int, int], float]:
        return dict(self._edges)

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.num_vertices:
            raise IndexError(f"vertex index {i} out of range for {self.num_vertices} vertices")

    def parents(self, i: int) -> frozenset[int]:
        self._check_index(i)
        return self._parents[i]

    def children(self, i: int) -> frozenset[int]:
        self._check_index(i)
        return self._children[i]

    def markov_boundary(self, i: int) -> frozenset[int]:
        """Parents, children, and co-parents of children, excluding i itself."""
        self._check_index(i)
        mb = set(self._parents[i]) | set(self._children[i])
        for c in self._children[i]:
            mb |= self._parents[c]
        mb.discard(i)
        return frozenset(mb)

    def moralize(self) -> "UndirectedGraph":
        """Undirected moral graph: j adjacent to i iff i is in mb(j)."""
        n = self.num_vertices
        adj = np.zeros((n, n), dtype=np.int8)
        for j in range(n):
            for i in self.markov_boundary(j):
                adj[i, j] = 1
                adj[j, i] = 1
        return UndirectedGraph(adj)

    def max_indegree(self) -> int:
        if self.num_vertices == 0:
            return 0
        return max(len(p) for p in self._parents)

    def adjacency_matrix(self) -> np.ndarray:
        """Weighted adjacency with entry (i, j) = weight of edge i -> j."""
        n = self.num_vertices
        a = np.zeros((n, n))
        for (i, j), beta in self._edges.items():
            a[i, j] = beta
        return a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDag):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __repr__(self) -> str:
        return f"WeightedDag(n={self.num_vertices}, edges={len(self._edges)})"


class UndirectedGraph:
    """Unweighted undirected graph as a symmetric 0/1 adjacency matrix."""

    def __init__(self, adjacency: np.ndarray):
        adj = np.asarray(adjacency, dtype=np.int8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(adj) != 0):
            raise ValueError("adjacency diagonal must be zero")
        if not np.all((adj == 0) | (adj == 1)):
            raise ValueError("adjacency entries must be 0 or 1")
        self._adj = adj
        self._adj.setflags(write=False)

    @property
    def num_vertices(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    def neighbors(self, i: int) -> list[int]:
        return list(np.flatnonzero(self._adj[i]))

    def num_edges(self) -> int:
        return int(self._adj.sum()) // 2

    def is_bipartite(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """A 2-coloring as (part0, part1), or None when an odd cycle exists.

        Components are colored independently; each component's color-0 set is
        merged into part0.
        """
        n = self.num_vertices
        color = [-1] * n
        for start in range(n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.neighbors(v):
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        part0 = frozenset(v for v in range(n) if color[v] == 0)
        part1 = frozenset(v for v in range(n) if color[v] == 1)
        return part0, part1

    def is_forest(self) -> bool:
        """True iff acyclic; disconnected acyclic graphs count as forests."""
        n = self.num_vertices
        seen = [False] * n
        components = 0
        for start in range(n):
            if seen[start]:
                continue
            components += 1
            seen[start] = True
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.neighbors(v):
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return self.num_edges() == n - components

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.num_vertices}, edges={self.num_edges()})"
