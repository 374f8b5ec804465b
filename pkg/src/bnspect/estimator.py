"""scikit-learn compatible wrapper around the spectral tree tests.

Lets the data-facing path (estimate a normalized precision, run the two tree
criteria) drop into sklearn pipelines and model-selection tooling.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .random_models import empirical_normalized_precision
from .spectral import symmetric_eigenvalues, tree_test_lambda, tree_test_symmetry


class MoralTreeTest(BaseEstimator):
    """Estimate the normalized precision of X and test for a tree moral graph.

    Parameters
    ----------
    tol : float
        Verdict tolerance. Empirical spectra carry sampling noise, so values
        far looser than the exact-model default are appropriate (0.1 is a
        reasonable starting point at N ~ 1e5).

    Attributes (after fit)
    ----------------------
    omega_ : estimated normalized precision matrix, unit diagonal
    eigenvalues_ : its spectrum, descending
    lambda1_ : largest eigenvalue
    symmetry_residual_ : worst pairing residual about 1
    lambda_verdict_, symmetry_verdict_ : TreeTestVerdict for each criterion
    is_tree_consistent_ : True when both criteria pass
    """

    def __init__(self, tol: float = 0.1):
        self.tol = tol

    def fit(self, X, y=None):
        X = check_array(X, ensure_min_samples=2)
        self.n_features_in_ = X.shape[1]
        self.omega_ = empirical_normalized_precision(X)
        self.eigenvalues_ = np.array(symmetric_eigenvalues(self.omega_).eigenvalues)
        self.lambda_verdict_ = tree_test_lambda(self.omega_, self.tol)
        self.symmetry_verdict_ = tree_test_symmetry(self.omega_, self.tol)
        self.lambda1_ = self.lambda_verdict_.statistic
        self.symmetry_residual_ = self.symmetry_verdict_.statistic
        self.is_tree_consistent_ = (self.lambda_verdict_.passed
                                    and self.symmetry_verdict_.passed)
        return self

    def decision_function(self, X=None):
        """Margin of the lambda criterion: 2 - lambda1 (positive = passing)."""
        check_is_fitted(self, "lambda1_")
        return 2.0 - self.lambda1_
