"""Symmetric eigendecomposition, Rayleigh quotients, and tree verdicts.

Verdict paths use eigenvalues only; eigenvectors are computed just for the
reconstruction contract and the Min-Max cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EvenPower, NotNormalized, NotSymmetric, ZeroMagnitude, ZeroVector
from .hypergraph import WeightedHypergraph

SYMMETRY_ATOL = 1e-10
DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues of a symmetric matrix, sorted descending."""

    eigenvalues: tuple[float, ...]

    def __post_init__(self):
        vals = self.eigenvalues
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("eigenvalues must be sorted descending")

    @property
    def largest(self) -> float:
        return self.eigenvalues[0]

    def __len__(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class TreeTestVerdict:
    """Outcome of one spectral tree criterion.

    A lambda_bound pass means "consistent with a tree moral graph", never
    "tree confirmed": the bound's converse does not hold.
    """

    criterion: str  # "lambda_bound" or "symmetry"
    passed: bool
    statistic: float
    threshold: float


def _require_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric("matrix must be square")
    asym = float(np.abs(m - m.T).max()) if m.size else 0.0
    if asym > SYMMETRY_ATOL * max(1.0, float(np.abs(m).max())):
        raise NotSymmetric(f"asymmetry {asym:.3e} exceeds tolerance")
    return (m + m.T) / 2


def symmetric_eigenvalues(m: np.ndarray) -> Spectrum:
    """Descending real eigenvalues; input symmetrized after a symmetry check."""
    sym = _require_symmetric(m)
    vals = np.linalg.eigvalsh(sym)[::-1]
    return Spectrum(eigenvalues=tuple(float(v) for v in vals))


def symmetric_eigh(m: np.ndarray) -> tuple[Spectrum, np.ndarray]:
    """Eigenvalues (descending) with matching eigenvector columns."""
    sym = _require_symmetric(m)
    vals, vecs = np.linalg.eigh(sym)
    order = np.argsort(vals)[::-1]
    return (Spectrum(eigenvalues=tuple(float(v) for v in vals[order])),
            vecs[:, order])


def rayleigh_quotient(h: WeightedHypergraph, x: np.ndarray) -> float:
    """Rayleigh quotient of the normalized Laplacian via the edge-sum formula.

    Computed as the squared column sums of the magnitude-scaled incidence
    matrix applied to x, never by forming the Laplacian itself.
    """
    x = np.asarray(x, dtype=float)
    denom = float(x @ x)
    if denom == 0:
        raise ZeroVector("Rayleigh quotient undefined at the zero vector")
    m = h.magnitudes()
    zero = np.flatnonzero(m == 0)
    if zero.size:
        raise ZeroMagnitude(int(zero[0]))
    edge_sums = h.incidence_matrix().T @ (x / np.sqrt(m))
    return float(edge_sums @ edge_sums) / denom


def max_eigenvalue_bound(h: WeightedHypergraph, slack: float = 1e-9
                         ) -> tuple[float, int, bool]:
    """Largest normalized-Laplacian eigenvalue vs the maximum edge size."""
    lam1 = symmetric_eigenvalues(h.normalized_laplacian()).largest
    nabla = h.stats().max_edge_size
    return lam1, nabla, lam1 <= nabla + slack


def _require_normalized(m: np.ndarray, tol: float) -> np.ndarray:
    sym = _require_symmetric(m)
    dev = float(np.abs(np.diag(sym) - 1.0).max())
    if dev > tol:
        raise NotNormalized(f"diagonal deviates from 1 by {dev:.3e}")
    return sym


def tree_test_lambda(omega: np.ndarray, tol: float = DEFAULT_TOL) -> TreeTestVerdict:
    """Largest-eigenvalue tree criterion: passes when lambda_1 <= 2 + tol."""
    sym = _require_normalized(omega, tol)
    lam1 = symmetric_eigenvalues(sym).largest
    return TreeTestVerdict(criterion="lambda_bound", passed=lam1 <= 2 + tol,
                           statistic=lam1, threshold=2 + tol)


def symmetry_about(spectrum: Spectrum, a: float, tol: float) -> tuple[bool, float]:
    """Additive symmetry of a sorted spectrum about a.

    Pairs the i-th largest with the i-th smallest eigenvalue; for sorted real
    lists this is equivalent to multiset equality of {lambda} and {2a-lambda}.
    An odd-length middle eigenvalue pairs with itself, forcing it to equal a.
    """
    vals = spectrum.eigenvalues
    p = len(vals)
    if p == 0:
        return True, 0.0
    residual = max(abs(vals[i] + vals[p - 1 - i] - 2 * a) for i in range((p + 1) // 2))
    return residual <= tol, residual


def tree_test_symmetry(omega: np.ndarray, tol: float = DEFAULT_TOL) -> TreeTestVerdict:
    """Eigenvalue-symmetry tree criterion: spectrum symmetric about 1."""
    sym = _require_normalized(omega, tol)
    _, residual = symmetry_about(symmetric_eigenvalues(sym), 1.0, tol)
    return TreeTestVerdict(criterion="symmetry", passed=residual <= tol,
                           statistic=residual, threshold=tol)


def odd_power_trace(c: np.ndarray, s: int) -> float:
    """Trace of the s-th power (s odd) by repeated multiplication."""
    if s < 1 or s % 2 == 0:
        raise EvenPower(f"power {s} is not a positive odd integer")
    sym = _require_symmetric(c)
    power = sym
    for _ in range(s - 1):
        power = power @ sym
    return float(np.trace(power))


def minmax_check(h: WeightedHypergraph, trials: int, seed: int,
                 x0: np.ndarray | None = None) -> float:
    """Max Rayleigh quotient over random unit vectors, with refinement.

    Never exceeds lambda_1 (Min-Max); approaches it from below by running
    shifted power iteration from the best sampled vector, still scoring each
    candidate through the edge-sum Rayleigh formula.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    n = h.num_vertices
    best_val = -np.inf
    best_x = None
    candidates = [rng.standard_normal(n) for _ in range(trials)]
    if x0 is not None:
        candidates.append(np.asarray(x0, dtype=float))
    for x in candidates:
        val = rayleigh_quotient(h, x)
        if val > best_val:
            best_val, best_x = val, x
    # power iteration on L + nabla*I keeps the top eigenvalue dominant (L is psd)
    ell = h.normalized_laplacian()
    shift = float(h.stats().max_edge_size) + 1.0
    x = best_x / np.linalg.norm(best_x)
    for _ in range(200):
        x = ell @ x + shift * x
        norm = np.linalg.norm(x)
        if norm == 0:
            break
        x /= norm
        best_val = max(best_val, rayleigh_quotient(h, x))
    return best_val
