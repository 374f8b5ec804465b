import numpy as np
import pytest

from bnspect import (GeneratorConfig, SingularCovariance,
                     empirical_normalized_precision, random_bounded_indegree_bn,
                     random_dag, random_erdos_bn, random_forest_bn, sample_data,
                     symmetric_eigenvalues)


class TestGeneratorConfig:
    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            GeneratorConfig(n=0)

    def test_rejects_bad_edge_prob(self):
        with pytest.raises(ValueError):
            GeneratorConfig(n=3, edge_prob=1.5)

    def test_rejects_zero_weight_low(self):
        with pytest.raises(ValueError):
            GeneratorConfig(n=3, weight_low=0.0)


class TestRandomDag:
    def test_single_vertex(self):
        dag = random_dag(GeneratorConfig(n=1, edge_prob=0.5, seed=0))
        assert dag.num_vertices == 1
        assert dag.edges == {}

    def test_zero_probability_empty(self):
        dag = random_dag(GeneratorConfig(n=6, edge_prob=0.0, seed=1))
        assert dag.edges == {}

    def test_full_probability_complete(self):
        dag = random_dag(GeneratorConfig(n=3, edge_prob=1.0, seed=2))
        assert len(dag.edges) == 3
        assert dag.max_indegree() == 2

    def test_deterministic(self):
        cfg = GeneratorConfig(n=8, edge_prob=0.4, seed=123)
        assert random_dag(cfg).edges == random_dag(cfg).edges

    def test_weights_bounded_away_from_zero(self):
        dag = random_dag(GeneratorConfig(n=10, edge_prob=0.8, seed=5))
        for beta in dag.edges.values():
            assert 0.3 <= abs(beta) <= 2.0


class TestForestBn:
    def test_at_most_one_parent_and_forest_moral_graph(self):
        for seed in range(100):
            bn = random_forest_bn(n=20, seed=seed)
            assert bn.dag.max_indegree() <= 1
            assert bn.dag.moralize().is_forest()

    def test_single_vertex(self):
        bn = random_forest_bn(n=1, seed=0)
        assert bn.num_vertices == 1
        assert bn.dag.edges == {}

    def test_lambda1_bound(self):
        for seed in range(50):
            bn = random_forest_bn(n=12, seed=seed)
            omega = bn.precision().normalized_precision
            assert symmetric_eigenvalues(omega).largest <= 2 + 1e-9


class TestBoundedIndegreeBn:
    def test_k_zero_empty(self):
        assert random_bounded_indegree_bn(n=8, k=0, seed=0).dag.edges == {}

    def test_k_one_is_forest(self):
        for seed in range(20):
            bn = random_bounded_indegree_bn(n=10, k=1, seed=seed)
            assert bn.dag.max_indegree() <= 1
            assert bn.dag.moralize().is_forest()

    def test_k_two_cap_respected(self):
        for seed in range(50):
            assert random_bounded_indegree_bn(n=10, k=2, seed=seed).dag.max_indegree() <= 2


class TestSampleData:
    def test_shape_single_row(self, chain_bn):
        assert sample_data(chain_bn, 1, seed=0).shape == (1, 2)

    def test_deterministic(self, chain_bn):
        a = sample_data(chain_bn, 100, seed=42)
        b = sample_data(chain_bn, 100, seed=42)
        assert np.array_equal(a, b)

    def test_empty_bn_mean_near_zero(self):
        from bnspect import LinearBn, WeightedDag
        bn = LinearBn(WeightedDag(["a", "b", "c"], {}), [1.0, 1.0, 1.0])
        data = sample_data(bn, 40000, seed=7)
        assert np.abs(data.mean(axis=0)).max() < 4 / np.sqrt(40000)

    def test_chain_sample_covariance(self, chain_bn):
        data = sample_data(chain_bn, 100000, seed=11)
        s = np.cov(data, rowvar=False)
        assert np.abs(s - [[1.0, 2.0], [2.0, 5.0]]).max() < 0.05

    def test_uniform_noise_same_covariance(self, chain_bn):
        data = sample_data(chain_bn, 100000, seed=13, noise="uniform")
        s = np.cov(data, rowvar=False)
        assert np.abs(s - [[1.0, 2.0], [2.0, 5.0]]).max() < 0.05

    def test_unknown_noise_rejected(self, chain_bn):
        with pytest.raises(ValueError):
            sample_data(chain_bn, 10, seed=0, noise="cauchy")


class TestEmpiricalNormalizedPrecision:
    def test_consistency_chain(self, chain_bn):
        data = sample_data(chain_bn, 100000, seed=17)
        omega_hat = empirical_normalized_precision(data)
        omega = chain_bn.precision().normalized_precision
        assert np.abs(omega_hat - omega).max() <= 0.05

    def test_too_few_samples(self):
        with pytest.raises(SingularCovariance):
            empirical_normalized_precision(np.ones((3, 3)))

    def test_duplicate_columns_singular(self):
        rng = np.random.default_rng(0)
        col = rng.standard_normal(100)
        with pytest.raises(SingularCovariance):
            empirical_normalized_precision(np.column_stack([col, col]))

    def test_unit_diagonal_symmetric(self, chain_bn):
        data = sample_data(chain_bn, 500, seed=19)
        omega_hat = empirical_normalized_precision(data)
        assert np.array_equal(np.diag(omega_hat), np.ones(2))
        assert np.array_equal(omega_hat, omega_hat.T)

    def test_lambda1_convergence(self, chain_bn):
        exact = 1 + 2 / np.sqrt(5)
        hits = 0
        for seed in range(40):
            data = sample_data(chain_bn, 100000, seed=seed)
            lam1 = symmetric_eigenvalues(empirical_normalized_precision(data)).largest
            hits += abs(lam1 - exact) <= 0.05
        assert hits >= 38
