"""Seeded random generators for DAGs, linear BNs, and Gaussian samples.

Weight distributions are continuous and bounded away from zero, so generated
networks satisfy the nonzero-edge-weight contract with margin and exact
cancellations happen with probability 0. Every generator is fully determined
by its seed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import SingularCovariance
from .graphs import WeightedDag
from .linear_bn import LinearBn

DEFAULT_WEIGHT_LOW = 0.3
DEFAULT_WEIGHT_HIGH = 2.0
DEFAULT_SIGMA_LOW = 0.5
DEFAULT_SIGMA_HIGH = 2.0


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for random model generation.

    Exactly one of edge_prob (Erdos-Renyi over a fixed topological order) or
    max_indegree (per-vertex parent cap) selects the structural regime.
    """

    n: int
    edge_prob: float | None = None
    max_indegree: int | None = None
    weight_low: float = DEFAULT_WEIGHT_LOW
    weight_high: float = DEFAULT_WEIGHT_HIGH
    sigma_low: float = DEFAULT_SIGMA_LOW
    sigma_high: float = DEFAULT_SIGMA_HIGH
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.edge_prob is not None and not 0 <= self.edge_prob <= 1:
            raise ValueError("edge_prob must be in [0, 1]")
        if self.max_indegree is not None and self.max_indegree < 0:
            raise ValueError("max_indegree must be >= 0")
        if not 0 < self.weight_low <= self.weight_high:
            raise ValueError("weight bounds must satisfy 0 < low <= high")
        if not 0 < self.sigma_low <= self.sigma_high:
            raise ValueError("sigma bounds must satisfy 0 < low <= high")


def _labels(n: int) -> list[str]:
    return [f"v{i + 1}" for i in range(n)]


def _draw_weight(rng: np.random.Generator, low: float, high: float) -> float:
    return rng.choice([-1.0, 1.0]) * rng.uniform(low, high)


def _draw_sigma(rng: np.random.Generator, low: float, high: float) -> float:
    return rng.uniform(low, high)


def random_dag(config: GeneratorConfig) -> WeightedDag:
    """Erdos-Renyi DAG over the fixed topological order 0..n-1.

    Each forward pair is included independently with edge_prob; acyclic by
    construction, no rejection sampling needed.
    """
    if config.edge_prob is None:
        raise ValueError("random_dag requires edge_prob")
    rng = np.random.default_rng(config.seed)
    edges: dict[tuple[int, int], float] = {}
    for i in range(config.n):
        for j in range(i + 1, config.n):
            if rng.random() < config.edge_prob:
                edges[(i, j)] = _draw_weight(rng, config.weight_low, config.weight_high)
    return WeightedDag(_labels(config.n), edges)


def _attach_sigma(dag: WeightedDag, rng: np.random.Generator,
                  sigma_low: float, sigma_high: float) -> LinearBn:
    sigma = [_draw_sigma(rng, sigma_low, sigma_high) for _ in range(dag.num_vertices)]
    return LinearBn(dag, sigma)


def random_erdos_bn(n: int, edge_prob: float, seed: int,
                    weight_low: float = DEFAULT_WEIGHT_LOW,
                    weight_high: float = DEFAULT_WEIGHT_HIGH,
                    sigma_low: float = DEFAULT_SIGMA_LOW,
                    sigma_high: float = DEFAULT_SIGMA_HIGH) -> LinearBn:
    """Linear BN over random_dag with independently drawn noise scales."""
    config = GeneratorConfig(n=n, edge_prob=edge_prob, seed=seed,
                             weight_low=weight_low, weight_high=weight_high,
                             sigma_low=sigma_low, sigma_high=sigma_high)
    dag = random_dag(config)
    rng = np.random.default_rng([seed, 1])
    return _attach_sigma(dag, rng, sigma_low, sigma_high)


def random_forest_bn(n: int, seed: int,
                     child_prob: float = 0.75,
                     weight_low: float = DEFAULT_WEIGHT_LOW,
                     weight_high: float = DEFAULT_WEIGHT_HIGH,
                     sigma_low: float = DEFAULT_SIGMA_LOW,
                     sigma_high: float = DEFAULT_SIGMA_HIGH) -> LinearBn:
    """BN whose every vertex has at most one parent; its moral graph is a forest.

    Each non-first vertex is independently a root or the child of a uniformly
    chosen earlier vertex.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng([seed, 2])
    edges: dict[tuple[int, int], float] = {}
    for j in range(1, n):
        if rng.random() < child_prob:
            i = int(rng.integers(0, j))
            edges[(i, j)] = _draw_weight(rng, weight_low, weight_high)
    dag = WeightedDag(_labels(n), edges)
    return _attach_sigma(dag, rng, sigma_low, sigma_high)


def random_bounded_indegree_bn(n: int, k: int, seed: int,
                               weight_low: float = DEFAULT_WEIGHT_LOW,
                               weight_high: float = DEFAULT_WEIGHT_HIGH,
                               sigma_low: float = DEFAULT_SIGMA_LOW,
                               sigma_high: float = DEFAULT_SIGMA_HIGH) -> LinearBn:
    """BN where vertex i's parent count is uniform on {0..min(k, i)}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    rng = np.random.default_rng([seed, 3])
    edges: dict[tuple[int, int], float] = {}
    for j in range(n):
        cap = min(k, j)
        count = int(rng.integers(0, cap + 1))
        if count:
            for i in rng.choice(j, size=count, replace=False):
                edges[(int(i), j)] = _draw_weight(rng, weight_low, weight_high)
    dag = WeightedDag(_labels(n), edges)
    return _attach_sigma(dag, rng, sigma_low, sigma_high)


def sample_data(bn: LinearBn, num_samples: int, seed: int,
                noise: str | None = None) -> np.ndarray:
    """Draw rows of (I - A^T)^{-1} eps; eps_i independent mean-0, scale sigma_i.

    Noise is Gaussian by default; set noise="uniform" (or BNSPECT_NOISE) to
    exercise that the covariance depends only on the first two moments.
    """
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    if noise is None:
        noise = os.environ.get("BNSPECT_NOISE", "gaussian")
    rng = np.random.default_rng(seed)
    n = bn.num_vertices
    if noise == "gaussian":
        eps = rng.standard_normal((num_samples, n))
    elif noise == "uniform":
        eps = rng.uniform(-np.sqrt(3), np.sqrt(3), size=(num_samples, n))
    else:
        raise ValueError(f"unknown noise kind: {noise!r}")
    eps *= bn.sigma[np.newaxis, :]
    a = bn.dag.adjacency_matrix()
    return np.linalg.solve(np.eye(n) - a.T, eps.T).T


def empirical_normalized_precision(data: np.ndarray) -> np.ndarray:
    """Normalized inverse of the unbiased sample covariance.

    Requires more observations than variables; raises SingularCovariance when
    the sample covariance is rank-deficient at working precision.
    """
    data = np.asarray(data, dtype=float)
    if data.ndim != 2:
        raise ValueError("data must be a 2-D observations-by-variables matrix")
    num_samples, p = data.shape
    if num_samples <= p:
        raise SingularCovariance(
            f"need more observations than variables (got N={num_samples}, p={p})")
    s = np.cov(data, rowvar=False, ddof=1).reshape(p, p)
    # reciprocal condition check: treat near-singular S as singular
    svals = np.linalg.svd(s, compute_uv=False)
    if svals[-1] <= svals[0] * p * np.finfo(float).eps:
        raise SingularCovariance("sample covariance is singular at working precision")
    prec = np.linalg.inv(s)
    prec = (prec + prec.T) / 2
    d = 1.0 / np.sqrt(np.diag(prec))
    omega = prec * np.outer(d, d)
    np.fill_diagonal(omega, 1.0)
    return omega
