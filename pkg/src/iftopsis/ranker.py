"""Scikit-learn style estimator wrapping the ranking methods.

TopsisRanker follows the fit/transform/predict contract: fit builds the
decision problem from a matrix of IFVs, runs the selected method and
stores the fitted ideal points; transform scores (possibly new) rows
against those ideals; predict turns scores into 1-based rank positions.
Hyperparameters live in __init__ untouched, so get_params, set_params
and clone behave the way sklearn expects.

    >>> from iftopsis import TopsisRanker
    >>> X = [[(0.6, 0.3), (0.5, 0.2)], [(0.8, 0.1), (0.7, 0.2)]]
    >>> TopsisRanker(weights=(0.5, 0.5)).fit(X).closeness_
    array([0., 1.])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import DegenerateProblem, DomainError
from .measures import KGammaMetric, XYMetric, ZXMetric, d_euclidean, weighted_similarity
from .topsis import (
    ATTRIBUTE_KINDS,
    Attribute,
    DecisionProblem,
    IdealPoints,
    IfvWeights,
    ScalarWeights,
    _grid_similarity,
    ideal_points,
    normalize,
    rank_closeness,
    topsis_chen,
    topsis_li,
    topsis_proposed,
)
from .validation import as_ifv_matrix, as_weight_vector
from .values import IFV, complement, prob_product, scale

_METHODS = ("proposed", "li", "chen")
_ORDERS = ("xy", "zx", "agg")


class TopsisRanker(BaseEstimator, TransformerMixin):
    """Rank alternatives described by intuitionistic fuzzy evaluations.

    Parameters
    ----------
    method : {"proposed", "li", "chen"}
        "proposed" is the monotone weighted-similarity method; the other
        two are the distance-ratio and similarity-grid baselines kept
        for comparison (both can rank dominated alternatives higher).
    order : {"xy", "zx", "agg"}
        Linear order and metric family used by the proposed method:
        score/accuracy, L-value/accuracy, or the two-functional order
        built from K aggregations with parameters gamma1 and gamma2.
    lam : float
        Metric sharpness parameter, at least 1.
    gamma1, gamma2 : float
        K-aggregation parameters for order="agg"; must differ.
    weights : sequence or None
        Attribute weights, scalars summing to 1 or (with method="li")
        IFV pairs.  None means equal scalar weights.
    kinds : sequence of {"benefit", "cost"} or None
        Attribute directions; None means all benefit.
    allow_non_admissible : bool
        Passed through to the proposed method.

    Attributes
    ----------
    closeness_ : ndarray of shape (n,)
        Closeness of the training alternatives.
    result_ : RankingResult
        Full ranking of the training matrix.
    ideal_positive_, ideal_negative_ : tuple of IFV
        Fitted anchors that transform scores against.
    """

    def __init__(
        self,
        method: str = "proposed",
        order: str = "xy",
        lam: float = 100.0,
        gamma1: float = 0.5,
        gamma2: float = 0.8,
        weights=None,
        kinds=None,
        allow_non_admissible: bool = False,
    ):
        self.method = method
        self.order = order
        self.lam = lam
        self.gamma1 = gamma1
        self.gamma2 = gamma2
        self.weights = weights
        self.kinds = kinds
        self.allow_non_admissible = allow_non_admissible

    # ------------------------------------------------------------------
    def _make_metric(self):
        if self.order == "xy":
            return XYMetric(float(self.lam))
        if self.order == "zx":
            return ZXMetric(float(self.lam))
        if self.order == "agg":
            return KGammaMetric(float(self.gamma1), float(self.gamma2), float(self.lam))
        raise DomainError(f"unknown order {self.order!r}; choose from {_ORDERS}")

    def _make_problem(self, matrix) -> DecisionProblem:
        m = len(matrix[0])
        kinds = tuple(self.kinds) if self.kinds is not None else ("benefit",) * m
        if len(kinds) != m:
            raise DomainError(f"{len(kinds)} kinds for {m} attributes")
        for k in kinds:
            if k not in ATTRIBUTE_KINDS:
                raise DomainError(f"unknown attribute kind {k!r}")
        raw = self.weights if self.weights is not None else (1.0 / m,) * m
        coerced = as_weight_vector(raw, m)
        if coerced and isinstance(coerced[0], IFV):
            weights = IfvWeights(coerced)
        else:
            weights = ScalarWeights(coerced)
        return DecisionProblem(
            alternatives=tuple(f"A{i + 1}" for i in range(len(matrix))),
            attributes=tuple(Attribute(f"O{j + 1}", k) for j, k in enumerate(kinds)),
            matrix=matrix,
            weights=weights,
        )

    # ------------------------------------------------------------------
    def fit(self, X, y=None):
        """Build the problem, rank it and store the fitted anchors."""
        if self.method not in _METHODS:
            raise DomainError(f"unknown method {self.method!r}; choose from {_METHODS}")
        matrix = as_ifv_matrix(X)
        problem = self._make_problem(matrix)
        self.n_features_in_ = problem.n_attributes
        self.kinds_ = tuple(a.kind for a in problem.attributes)
        self.weights_ = problem.weights
        if self.method == "proposed":
            self.metric_ = self._make_metric()
            result = topsis_proposed(
                problem, self.metric_, allow_non_admissible=self.allow_non_admissible
            )
            norm = normalize(problem)
            anchors = ideal_points(norm.matrix)
        elif self.method == "li":
            self.metric_ = None
            result = topsis_li(problem)
            weighted = tuple(
                self._li_weighted_row(row) for row in normalize(problem).matrix
            )
            anchors = ideal_points(weighted)
        else:
            self.metric_ = None
            result = topsis_chen(problem)
            anchors = self._chen_anchors(problem)
        self.ideal_positive_ = anchors.positive
        self.ideal_negative_ = anchors.negative
        self.result_ = result
        self.closeness_ = np.asarray(result.closeness)
        return self

    def _li_weighted_row(self, row):
        w = self.weights_.values
        if isinstance(self.weights_, IfvWeights):
            return tuple(prob_product(e, wj) for e, wj in zip(row, w))
        return tuple(scale(wj, e) for e, wj in zip(row, w))

    def _chen_anchors(self, problem: DecisionProblem):
        # the similarity-grid baseline picks ideals from the raw matrix,
        # flipping the extrema on cost attributes
        cols = list(zip(*problem.matrix))
        pos, neg = [], []
        for col, attr in zip(cols, problem.attributes):
            mus = [e.mu for e in col]
            nus = [e.nu for e in col]
            if attr.kind == "benefit":
                pos.append(IFV(max(mus), min(nus)))
                neg.append(IFV(min(mus), max(nus)))
            else:
                pos.append(IFV(min(mus), max(nus)))
                neg.append(IFV(max(mus), min(nus)))
        return IdealPoints(tuple(pos), tuple(neg))

    # ------------------------------------------------------------------
    def _score_row(self, row) -> float:
        pos, neg = self.ideal_positive_, self.ideal_negative_
        if self.method == "chen":
            w = self.weights_.values
            s_pos = sum(wj * _grid_similarity(e, p) for wj, e, p in zip(w, row, pos))
            s_neg = sum(wj * _grid_similarity(e, q) for wj, e, q in zip(w, row, neg))
            total = s_pos + s_neg
            if total == 0.0:
                raise DegenerateProblem("similarity to both anchors is zero")
            return s_pos / total
        norm_row = tuple(
            complement(e) if k == "cost" else e for e, k in zip(row, self.kinds_)
        )
        if self.method == "li":
            wrow = self._li_weighted_row(norm_row)
            d_pos = d_euclidean(wrow, pos)
            d_neg = d_euclidean(wrow, neg)
            total = d_pos + d_neg
            if total == 0.0:
                raise DegenerateProblem("distance to both anchors is zero")
            return d_neg / total
        w = self.weights_.values
        s_pos = weighted_similarity(self.metric_, norm_row, pos, w)
        s_neg = weighted_similarity(self.metric_, norm_row, neg, w)
        return s_pos / (s_pos + s_neg)

    def transform(self, X) -> np.ndarray:
        """Closeness of each row of X to the fitted anchors, shape (n, 1)."""
        check_is_fitted(self, "ideal_positive_")
        matrix = as_ifv_matrix(X)
        if len(matrix[0]) != self.n_features_in_:
            raise DomainError(
                f"X has {len(matrix[0])} attributes, fitted for {self.n_features_in_}"
            )
        scores = [self._score_row(row) for row in matrix]
        return np.asarray(scores).reshape(-1, 1)

    def predict(self, X) -> np.ndarray:
        """1-based rank positions of the rows of X (1 = most preferred)."""
        scores = self.transform(X).ravel()
        result = rank_closeness(tuple(float(s) for s in scores))
        positions = np.empty(len(result.order), dtype=int)
        for rank, idx in enumerate(result.order, start=1):
            positions[idx] = rank
        return positions

    def ranking(self) -> str:
        """Preference string for the training matrix, e.g. "A2 > A1"."""
        check_is_fitted(self, "result_")
        return self.result_.ranking()
