"""Weighted incidence-simple hypergraphs and their six associated matrices.

Matrices are dense; the target scale (a few hundred vertices) does not justify
sparse machinery. Edges keep insertion order so the incidence matrix is
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import ZeroMagnitude


@dataclass(frozen=True)
class HypergraphStats:
    """Degree/size counts and their weighted analogues (magnitude/effect)."""

    degrees: tuple[int, ...]
    sizes: tuple[int, ...]
    magnitudes: tuple[float, ...]
    effects: tuple[float, ...]
    max_degree: int
    max_edge_size: int


class WeightedHypergraph:
    """Vertices, edges, and nonzero real incidence weights.

    Incidence-simple by construction: at most one weight per (vertex, edge)
    pair, and a stored weight is nonzero iff the incidence exists. Size-1
    edges (a vertex incident to an edge alone) are allowed.
    """

    def __init__(self, num_vertices: int, num_edges: int,
                 weights: Mapping[tuple[int, int], float]):
        if num_vertices < 0 or num_edges < 0:
            raise ValueError("vertex and edge counts must be nonnegative")
        checked: dict[tuple[int, int], float] = {}
        for (v, e), w in weights.items():
            if not (0 <= v < num_vertices):
                raise ValueError(f"vertex index {v} out of range")
            if not (0 <= e < num_edges):
                raise ValueError(f"edge index {e} out of range")
            if w == 0:
                raise ValueError(f"incidence ({v}, {e}) has zero weight")
            checked[(v, e)] = float(w)
        self._num_vertices = num_vertices
        self._num_edges = num_edges
        self._weights = checked

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def num_edges(self) -> int:
        return self._num_edges

    @property
    def weights(self) -> dict[tuple[int, int], float]:
        return dict(self._weights)

    def incidence_matrix(self) -> np.ndarray:
        """Dense p_V x p_E matrix of incidence weights (0 where no incidence)."""
        h = np.zeros((self._num_vertices, self._num_edges))
        for (v, e), w in self._weights.items():
            h[v, e] = w
        return h

    def magnitudes(self) -> np.ndarray:
        """Per-vertex sum of squared incidence weights."""
        h = self.incidence_matrix()
        return (h * h).sum(axis=1)

    def stats(self) -> HypergraphStats:
        degrees = [0] * self._num_vertices
        sizes = [0] * self._num_edges
        magnitudes = [0.0] * self._num_vertices
        effects = [0.0] * self._num_edges
        for (v, e), w in self._weights.items():
            degrees[v] += 1
            sizes[e] += 1
            magnitudes[v] += w * w
            effects[e] += w * w
        return HypergraphStats(
            degrees=tuple(degrees),
            sizes=tuple(sizes),
            magnitudes=tuple(magnitudes),
            effects=tuple(effects),
            max_degree=max(degrees, default=0),
            max_edge_size=max(sizes, default=0),
        )

    def magnitude_matrix(self) -> np.ndarray:
        return np.diag(self.magnitudes())

    def adjacency_matrix(self) -> np.ndarray:
        """Summed pairwise weight products, negated; diagonal structurally 0."""
        h = self.incidence_matrix()
        a = -(h @ h.T)
        np.fill_diagonal(a, 0.0)
        return a

    def _inv_sqrt_magnitudes(self) -> np.ndarray:
        m = self.magnitudes()
        zero = np.flatnonzero(m == 0)
        if zero.size:
            raise ZeroMagnitude(int(zero[0]))
        return 1.0 / np.sqrt(m)

    def normalized_adjacency(self) -> np.ndarray:
        s = self._inv_sqrt_magnitudes()
        return self.adjacency_matrix() * np.outer(s, s)

    def kirchhoff_laplacian(self) -> np.ndarray:
        """Magnitude matrix minus adjacency; symmetric positive semi-definite."""
        k = -self.adjacency_matrix()
        np.fill_diagonal(k, self.magnitudes())
        return k

    def normalized_laplacian(self) -> np.ndarray:
        """Identity minus normalized adjacency; diagonal exactly 1."""
        return np.eye(self._num_vertices) - self.normalized_adjacency()

    def __repr__(self) -> str:
        return (f"WeightedHypergraph(vertices={self._num_vertices}, "
                f"edges={self._num_edges}, incidences={len(self._weights)})")
