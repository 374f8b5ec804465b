"""Analysis reports: the full model battery and its empirical counterpart."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linear_bn import LinearBn, check_assumption1, check_assumption2, verify_theorem1
from .model_io import dumps_json, model_digest
from .spectral import (TreeTestVerdict, symmetric_eigenvalues, tree_test_lambda,
                       tree_test_symmetry)


@dataclass(frozen=True)
class AnalysisReport:
    """All spectral and structural diagnostics for one model or data set.

    Verdicts are recomputable from the numeric fields; the report is a pure
    function of (model, tol). Structural fields are None for empirical
    reports, where only the normalized precision estimate is available.
    """

    source: str  # "model" or "empirical"
    tol: float
    model_digest: Optional[str]
    eigenvalues: tuple[float, ...]
    lambda1: float
    symmetry_residual: float
    verdict_lambda: TreeTestVerdict
    verdict_symmetry: TreeTestVerdict
    max_edge_size: Optional[int] = None
    max_degree: Optional[int] = None
    max_indegree: Optional[int] = None
    moral_graph_is_forest: Optional[bool] = None
    theorem1_precision_residual: Optional[float] = None
    theorem1_omega_residual: Optional[float] = None
    theorem1_passed: Optional[bool] = None
    assumption1_violations: Optional[tuple[tuple[int, int], ...]] = None
    assumption2_violations: Optional[tuple[int, ...]] = None


def analyze_model(bn: LinearBn, tol: float = 1e-8) -> AnalysisReport:
    """Run the full battery on an exact model."""
    hyper = bn.structural_hypergraph()
    stats = hyper.stats()
    omega = bn.precision().normalized_precision
    verdict_lambda = tree_test_lambda(omega, tol)
    verdict_symmetry = tree_test_symmetry(omega, tol)
    identity = verify_theorem1(bn, tol)
    return AnalysisReport(
        source="model",
        tol=tol,
        model_digest=model_digest(bn),
        eigenvalues=symmetric_eigenvalues(omega).eigenvalues,
        lambda1=verdict_lambda.statistic,
        symmetry_residual=verdict_symmetry.statistic,
        verdict_lambda=verdict_lambda,
        verdict_symmetry=verdict_symmetry,
        max_edge_size=stats.max_edge_size,
        max_degree=stats.max_degree,
        max_indegree=bn.dag.max_indegree(),
        moral_graph_is_forest=bn.dag.moralize().is_forest(),
        theorem1_precision_residual=identity.precision_residual,
        theorem1_omega_residual=identity.omega_residual,
        theorem1_passed=identity.passed,
        assumption1_violations=tuple(check_assumption1(bn, tol)),
        assumption2_violations=tuple(check_assumption2(bn, tol=tol)),
    )


def analyze_omega(omega: np.ndarray, tol: float) -> AnalysisReport:
    """Spectral verdicts only, for an empirically estimated normalized precision."""
    verdict_lambda = tree_test_lambda(omega, tol)
    verdict_symmetry = tree_test_symmetry(omega, tol)
    return AnalysisReport(
        source="empirical",
        tol=tol,
        model_digest=None,
        eigenvalues=symmetric_eigenvalues(omega).eigenvalues,
        lambda1=verdict_lambda.statistic,
        symmetry_residual=verdict_symmetry.statistic,
        verdict_lambda=verdict_lambda,
        verdict_symmetry=verdict_symmetry,
    )


def render_report(report: AnalysisReport) -> str:
    """Deterministic JSON text with 17-significant-digit floats."""
    doc = {
        "source": report.source,
        "tol": report.tol,
        "model_digest": report.model_digest,
        "eigenvalues": [float(v) for v in report.eigenvalues],
        "lambda1": report.lambda1,
        "symmetry_residual": report.symmetry_residual,
        "verdicts": {
            "lambda_bound": {
                "passed": report.verdict_lambda.passed,
                "statistic": report.verdict_lambda.statistic,
                "threshold": report.verdict_lambda.threshold,
                "note": "pass is consistent with a tree moral graph, not proof of one",
            },
            "symmetry": {
                "passed": report.verdict_symmetry.passed,
                "statistic": report.verdict_symmetry.statistic,
                "threshold": report.verdict_symmetry.threshold,
            },
        },
        "structure": None,
        "theorem1": None,
        "assumptions": None,
    }
    if report.source == "model":
        doc["structure"] = {
            "max_edge_size": report.max_edge_size,
            "max_degree": report.max_degree,
            "max_indegree": report.max_indegree,
            "moral_graph_is_forest": report.moral_graph_is_forest,
        }
        doc["theorem1"] = {
            "precision_residual": report.theorem1_precision_residual,
            "omega_residual": report.theorem1_omega_residual,
            "passed": report.theorem1_passed,
        }
        doc["assumptions"] = {
            "violating_pairs": [list(p) for p in report.assumption1_violations],
            "violating_powers": list(report.assumption2_violations),
            "tolerance_note": "zero tests use the report tol; exact zeros are a modeling idealization",
        }
    return dumps_json(doc)
