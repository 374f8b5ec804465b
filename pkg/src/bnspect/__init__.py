"""Spectral analysis of linear Bayesian networks via weighted hypergraph Laplacians."""

from .analysis import AnalysisReport, analyze_model, analyze_omega, render_report
from .errors import (BnspectError, EvenPower, ModelFormatError, NotNormalized,
                     NotSymmetric, SingularCovariance, ZeroMagnitude, ZeroVector)
from .estimator import MoralTreeTest
from .graphs import UndirectedGraph, WeightedDag, is_acyclic
from .hypergraph import HypergraphStats, WeightedHypergraph
from .linear_bn import (IdentityReport, LinearBn, PrecisionPair, check_assumption1,
                        check_assumption2, verify_theorem1)
from .model_io import model_digest, parse_model, serialize_model
from .random_models import (GeneratorConfig, empirical_normalized_precision,
                            random_bounded_indegree_bn, random_dag, random_erdos_bn,
                            random_forest_bn, sample_data)
from .spectral import (Spectrum, TreeTestVerdict, max_eigenvalue_bound, minmax_check,
                       odd_power_trace, rayleigh_quotient, symmetric_eigenvalues,
                       symmetric_eigh, symmetry_about, tree_test_lambda,
                       tree_test_symmetry)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "analyze_model", "analyze_omega", "render_report",
    "BnspectError", "EvenPower", "ModelFormatError", "NotNormalized",
    "NotSymmetric", "SingularCovariance", "ZeroMagnitude", "ZeroVector",
    "MoralTreeTest",
    "UndirectedGraph", "WeightedDag", "is_acyclic",
    "HypergraphStats", "WeightedHypergraph",
    "IdentityReport", "LinearBn", "PrecisionPair", "check_assumption1",
    "check_assumption2", "verify_theorem1",
    "model_digest", "parse_model", "serialize_model",
    "GeneratorConfig", "empirical_normalized_precision",
    "random_bounded_indegree_bn", "random_dag", "random_erdos_bn",
    "random_forest_bn", "sample_data",
    "Spectrum", "TreeTestVerdict", "max_eigenvalue_bound", "minmax_check",
    "odd_power_trace", "rayleigh_quotient", "symmetric_eigenvalues",
    "symmetric_eigh", "symmetry_about", "tree_test_lambda", "tree_test_symmetry",
]
