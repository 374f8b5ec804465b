"""Linear Bayesian networks and their structural hypergraphs.

A linear BN couples a weighted DAG with per-vertex noise scales. Its exact
precision matrix is formed by the product formula (never by inverting the
covariance), so identity checks against the hypergraph Laplacian measure only
rounding error, not conditioning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import WeightedDag
from .hypergraph import WeightedHypergraph


@dataclass(frozen=True)
class PrecisionPair:
    """Precision matrix and its unit-diagonal normalization."""

    precision: np.ndarray
    normalized_precision: np.ndarray


@dataclass(frozen=True)
class IdentityReport:
    """Entrywise residuals of precision vs Kirchhoff Laplacian identity."""

    precision_residual: float
    precision_scale: float
    omega_residual: float
    passed: bool


class LinearBn:
    """A weighted DAG plus positive noise scales, one per vertex."""

    def __init__(self, dag: WeightedDag, sigma: Sequence[float]):
        sig = np.asarray(sigma, dtype=float)
        if sig.shape != (dag.num_vertices,):
            raise ValueError("sigma length must equal vertex count")
        if np.any(sig <= 0):
            raise ValueError("all noise scales must be positive")
        self._dag = dag
        self._sigma = sig
        self._sigma.setflags(write=False)

    @property
    def dag(self) -> WeightedDag:
        return self._dag

    @property
    def sigma(self) -> np.ndarray:
        return self._sigma

    @property
    def num_vertices(self) -> int:
        return self._dag.num_vertices

    def structural_hypergraph(self) -> WeightedHypergraph:
        """One edge per vertex: e_k covers v_k and its parents.

        Weight 1/sigma_k on the vertex itself and -beta_ik/sigma_k on each
        parent, so the edge count always equals the vertex count.
        """
        n = self.num_vertices
        weights: dict[tuple[int, int], float] = {}
        for k in range(n):
            weights[(k, k)] = 1.0 / self._sigma[k]
        for (i, k), beta in self._dag.edges.items():
            weights[(i, k)] = -beta / self._sigma[k]
        return WeightedHypergraph(n, n, weights)

    def covariance(self) -> np.ndarray:
        """Exact covariance; always defined because the DAG adjacency is nilpotent."""
        n = self.num_vertices
        a = self._dag.adjacency_matrix()
        binv = np.linalg.solve(np.eye(n) - a.T, np.eye(n))
        cov = (binv * self._sigma**2) @ binv.T
        return (cov + cov.T) / 2

    def precision(self) -> PrecisionPair:
        """Precision by the product formula and its diagonal normalization."""
        n = self.num_vertices
        b = (np.eye(n) - self._dag.adjacency_matrix()) / self._sigma[np.newaxis, :]
        prec = b @ b.T
        d = 1.0 / np.sqrt(np.diag(prec))
        omega = prec * np.outer(d, d)
        np.fill_diagonal(omega, 1.0)
        return PrecisionPair(precision=prec, normalized_precision=omega)

    def __repr__(self) -> str:
        return f"LinearBn({self._dag!r})"


def verify_theorem1(bn: LinearBn, tol: float = 1e-9) -> IdentityReport:
    """Max entrywise residuals of the precision/Laplacian identity.

    The precision residual is judged relative to the largest Laplacian entry
    (weights can scale entries arbitrarily); the normalized residual is
    absolute since the normalized matrices are O(1).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    h = bn.structural_hypergraph()
    pair = bn.precision()
    k = h.kirchhoff_laplacian()
    ell = h.normalized_laplacian()
    scale = max(1.0, float(np.abs(k).max()))
    prec_res = float(np.abs(pair.precision - k).max())
    omega_res = float(np.abs(pair.normalized_precision - ell).max())
    passed = prec_res <= tol * scale and omega_res <= tol
    return IdentityReport(precision_residual=prec_res, precision_scale=scale,
                          omega_residual=omega_res, passed=passed)


def check_assumption1(bn: LinearBn, tol: float = 1e-9) -> list[tuple[int, int]]:
    """Vertex pairs whose summed incidence-weight products cancel exactly.

    A pair (i, j) is a faithfulness violation when the per-edge products are
    not all zero yet their sum vanishes (within tol).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    h = bn.structural_hypergraph().incidence_matrix()
    n = h.shape[0]
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            products = h[i] * h[j]
            if abs(products.sum()) <= tol and np.abs(products).max() > tol:
                violations.append((i, j))
    return violations


def check_assumption2(bn: LinearBn, s_max: int | None = None, tol: float = 1e-9) -> list[int]:
    """Odd powers s where trace(C^s) vanishes but some diagonal entry does not.

    Defaults s_max to 2*p_V - 1: odd powers beyond the matrix dimension add no
    new spectral constraints.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = bn.num_vertices
    if s_max is None:
        s_max = 2 * n - 1
    if s_max < 1 or s_max % 2 == 0:
        raise ValueError("s_max must be an odd integer >= 1")
    c = bn.structural_hypergraph().normalized_adjacency()
    violations = []
    power = c.copy()
    for s in range(1, s_max + 1):
        if s > 1:
            power = power @ c
        if s % 2 == 1:
            diag = np.diag(power)
            if abs(diag.sum()) <= tol * n and np.abs(diag).max() > tol:
                violations.append(s)
    return violations
