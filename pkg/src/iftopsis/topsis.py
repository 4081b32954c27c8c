"""Decision problems and TOPSIS-style ranking methods over IFV matrices.

A decision problem is a matrix of IFVs (alternatives by attributes), a
benefit/cost kind per attribute, and a weight vector that is either
scalar or itself made of IFVs.

Three ranking methods are implemented.  Two are well-known baselines
kept for comparison: a distance-based method (topsis_li) that weights
the matrix, extracts ideal points from the weighted matrix and ranks by
a Euclidean closeness ratio, and a similarity-grid method (topsis_chen)
that scores each entry against case-split ideal points.  Both can rank a
dominated alternative above a dominating one, which the fuzz harness
demonstrates.  The third (topsis_proposed) ranks by weighted
order-compatible similarities to the ideal points and is monotone: if
one row dominates another pointwise under the metric's order, its
closeness degree is at least as large.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import (
    ConfigMismatch,
    DegenerateProblem,
    DomainError,
    LengthMismatch,
)
from .measures import AdmissibleMetric, XYMetric, check_weights, d_euclidean, weighted_similarity
from .values import IFV, complement, prob_product, scale

ATTRIBUTE_KINDS = ("benefit", "cost")


@dataclass(frozen=True)
class Attribute:
    """An attribute name together with its optimization direction."""

    name: str
    kind: str = "benefit"

    def __post_init__(self) -> None:
        if self.kind not in ATTRIBUTE_KINDS:
            raise DomainError(f"attribute kind must be benefit or cost, got {self.kind!r}")


@dataclass(frozen=True)
class ScalarWeights:
    """Positive real weights summing to 1."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", check_weights(self.values))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class IfvWeights:
    """Weights expressed as IFVs, used by the weighted-matrix baseline."""

    values: tuple[IFV, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        if len(vals) == 0:
            raise DomainError("weight vector is empty")
        for v in vals:
            if not isinstance(v, IFV):
                raise DomainError(f"IFV weights must be IFVs, got {type(v).__name__}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)


Weights = ScalarWeights | IfvWeights


@dataclass(frozen=True)
class DecisionProblem:
    """An immutable multi-attribute decision problem over IFVs."""

    alternatives: tuple[str, ...]
    attributes: tuple[Attribute, ...]
    matrix: tuple[tuple[IFV, ...], ...]
    weights: Weights

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        n, m = len(self.alternatives), len(self.attributes)
        if n < 2:
            raise DomainError("a decision problem needs at least two alternatives")
        if m < 1:
            raise DomainError("a decision problem needs at least one attribute")
        if len(self.matrix) != n:
            raise LengthMismatch(f"{len(self.matrix)} matrix rows for {n} alternatives")
        for i, row in enumerate(self.matrix):
            if len(row) != m:
                raise LengthMismatch(f"row {i} has {len(row)} entries for {m} attributes")
            for entry in row:
                if not isinstance(entry, IFV):
                    raise DomainError(f"matrix entries must be IFVs, got {type(entry).__name__}")
        if not isinstance(self.weights, (ScalarWeights, IfvWeights)):
            raise DomainError("weights must be ScalarWeights or IfvWeights")
        if len(self.weights) != m:
            raise LengthMismatch(f"{len(self.weights)} weights for {m} attributes")

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @classmethod
    def from_pairs(
        cls,
        matrix: Sequence[Sequence[tuple[float, float] | IFV]],
        weights: Sequence[float] | Sequence[tuple[float, float]] | Weights,
        kinds: Sequence[str] | None = None,
        alternatives: Sequence[str] | None = None,
        attribute_names: Sequence[str] | None = None,
        ifv_weights: bool = False,
    ) -> "DecisionProblem":
        """Build a problem from (mu, nu) pairs with default labels.

        Alternatives default to A1..An and attributes to O1..Om, all
        benefit.  Pass ifv_weights=True to read the weights as (mu, nu)
        pairs instead of scalars.
        """
        rows = [
            tuple(e if isinstance(e, IFV) else IFV(*e) for e in row) for row in matrix
        ]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        names = tuple(alternatives) if alternatives else tuple(f"A{i+1}" for i in range(n))
        attr_names = (
            tuple(attribute_names) if attribute_names else tuple(f"O{j+1}" for j in range(m))
        )
        kind_list = tuple(kinds) if kinds else ("benefit",) * m
        attrs = tuple(Attribute(a, k) for a, k in zip(attr_names, kind_list))
        w: Weights
        if isinstance(weights, (ScalarWeights, IfvWeights)):
            w = weights
        elif ifv_weights:
            w = IfvWeights(tuple(v if isinstance(v, IFV) else IFV(*v) for v in weights))
        else:
            w = ScalarWeights(tuple(weights))  # type: ignore[arg-type]
        return cls(names, attrs, tuple(rows), w)


@dataclass(frozen=True)
class IdealPoints:
    """Positive and negative ideal points, one IFV per attribute."""

    positive: tuple[IFV, ...]
    negative: tuple[IFV, ...]


@dataclass(frozen=True)
class RankingResult:
    """Closeness degrees with the induced preference order.

    order sorts indices by non-increasing closeness and is stable by
    original index inside ties, so a tie never silently expresses a
    preference; tie groups of two or more indices are also reported
    explicitly in ties.
    """

    closeness: tuple[float, ...]
    order: tuple[int, ...]
    ties: tuple[tuple[int, ...], ...]

    def ranking(self, names: Sequence[str] | None = None) -> str:
        """Render the order as "A2 > A5 > ..." with "~" joining ties."""
        labels = list(names) if names is not None else [
            f"A{i+1}" for i in range(len(self.closeness))
        ]
        parts: list[str] = []
        for pos, idx in enumerate(self.order):
            if pos > 0:
                prev = self.order[pos - 1]
                sep = " ~ " if self.closeness[prev] == self.closeness[idx] else " > "
                parts.append(sep)
            parts.append(labels[idx])
        return "".join(parts)


def rank_closeness(closeness: Sequence[float]) -> RankingResult:
    """Build a RankingResult from raw closeness degrees."""
    cs = tuple(float(c) for c in closeness)
    order = tuple(sorted(range(len(cs)), key=lambda i: (-cs[i], i)))
    ties: list[tuple[int, ...]] = []
    group: list[int] = []
    for idx in order:
        if group and cs[group[0]] == cs[idx]:
            group.append(idx)
        else:
            if len(group) > 1:
                ties.append(tuple(group))
            group = [idx]
    if len(group) > 1:
        ties.append(tuple(group))
    return RankingResult(cs, order, tuple(ties))


# ---------------------------------------------------------------------------
# Shared steps.

def normalize(problem: DecisionProblem) -> DecisionProblem:
    """Complement every cost column and mark all attributes benefit.

    All-benefit problems come back with an identical matrix; applying
    the function twice equals applying it once.
    """
    if all(attr.kind == "benefit" for attr in problem.attributes):
        return problem
    cost = tuple(attr.kind == "cost" for attr in problem.attributes)
    matrix = tuple(
        tuple(complement(e) if cost[j] else e for j, e in enumerate(row))
        for row in problem.matrix
    )
    attrs = tuple(replace(a, kind="benefit") for a in problem.attributes)
    return replace(problem, attributes=attrs, matrix=matrix)


def ideal_points(matrix: Sequence[Sequence[IFV]]) -> IdealPoints:
    """Componentwise extrema of a normalized matrix.

    Positive ideal: per attribute, max membership with min
    non-membership; negative ideal: min membership with max
    non-membership.  Both are valid IFVs because the extrema come from
    rows that individually satisfy mu + nu <= 1.
    """
    if len(matrix) == 0 or len(matrix[0]) == 0:
        raise DomainError("ideal points need a nonempty matrix")
    m = len(matrix[0])
    pos = tuple(
        IFV(max(row[j].mu for row in matrix), min(row[j].nu for row in matrix))
        for j in range(m)
    )
    neg = tuple(
        IFV(min(row[j].mu for row in matrix), max(row[j].nu for row in matrix))
        for j in range(m)
    )
    return IdealPoints(pos, neg)


def _require_scalar_weights(problem: DecisionProblem, method: str) -> tuple[float, ...]:
    if not isinstance(problem.weights, ScalarWeights):
        raise ConfigMismatch(f"{method} accepts scalar weights only")
    return problem.weights.values


# ---------------------------------------------------------------------------
# Baseline 1: weighted matrix, Euclidean distances to its ideal points.

def topsis_li(problem: DecisionProblem) -> RankingResult:
    """Distance-based baseline ranking.

    Weights the normalized matrix (IFV weights via the probabilistic
    product, scalar weights via the scalar multiple), extracts ideal
    points from the weighted matrix, and ranks by the Euclidean
    closeness ratio d(A_i, A-) / (d(A_i, A+) + d(A_i, A-)).

    Accepts both weight kinds.  Known defect, reproduced in the
    harness: the closeness ratio is not monotone with respect to
    componentwise dominance, so nearly identical alternatives can come
    back in the wrong relative order.
    """
    norm = normalize(problem)
    if isinstance(norm.weights, IfvWeights):
        wvals = norm.weights.values
        weighted = tuple(
            tuple(prob_product(w, e) for w, e in zip(wvals, row)) for row in norm.matrix
        )
    else:
        svals = norm.weights.values
        weighted = tuple(
            tuple(scale(w, e) for w, e in zip(svals, row)) for row in norm.matrix
        )
    ideals = ideal_points(weighted)
    closeness = []
    for i, row in enumerate(weighted):
        d_pos = d_euclidean(row, ideals.positive)
        d_neg = d_euclidean(row, ideals.negative)
        if d_pos + d_neg == 0.0:
            raise DegenerateProblem(
                f"alternative {norm.alternatives[i]} is at distance 0 from both ideal points"
            )
        closeness.append(d_neg / (d_pos + d_neg))
    return rank_closeness(closeness)


# ---------------------------------------------------------------------------
# Baseline 2: similarity grids against case-split ideal points.

def _grid_similarity(entry: IFV, ideal: IFV) -> float:
    # 1 - |2*dmu - dnu|/3 * (1 - mean pi) - |2*dnu - dmu|/3 * mean pi,
    # with differences taken ideal minus entry
    dmu = ideal.mu - entry.mu
    dnu = ideal.nu - entry.nu
    mean_pi = (ideal.pi + entry.pi) / 2.0
    return (
        1.0
        - abs(2.0 * dmu - dnu) / 3.0 * (1.0 - mean_pi)
        - abs(2.0 * dnu - dmu) / 3.0 * mean_pi
    )


def topsis_chen(problem: DecisionProblem) -> RankingResult:
    """Similarity-grid baseline ranking.  Scalar weights only.

    Ideal points are taken on the raw matrix with a benefit/cost case
    split (max mu, min nu per benefit column and the reverse per cost
    column, mirrored for the negative ideal).  Each entry is scored
    against both ideals with an indeterminacy-blended similarity, and
    alternatives rank by T = S+ / (S+ + S-) on the weighted scores.

    Known defect, reproduced in the harness: T is not monotone with
    respect to the score order.
    """
    weights = _require_scalar_weights(problem, "topsis_chen")
    benefit = tuple(attr.kind == "benefit" for attr in problem.attributes)
    m = problem.n_attributes
    cols = [[row[j] for row in problem.matrix] for j in range(m)]
    pos = tuple(
        IFV(max(v.mu for v in cols[j]), min(v.nu for v in cols[j]))
        if benefit[j]
        else IFV(min(v.mu for v in cols[j]), max(v.nu for v in cols[j]))
        for j in range(m)
    )
    neg = tuple(
        IFV(min(v.mu for v in cols[j]), max(v.nu for v in cols[j]))
        if benefit[j]
        else IFV(max(v.mu for v in cols[j]), min(v.nu for v in cols[j]))
        for j in range(m)
    )
    closeness = []
    for i, row in enumerate(problem.matrix):
        s_pos = sum(w * _grid_similarity(e, p) for w, e, p in zip(weights, row, pos))
        s_neg = sum(w * _grid_similarity(e, q) for w, e, q in zip(weights, row, neg))
        if s_pos + s_neg == 0.0:
            raise DegenerateProblem(
                f"alternative {problem.alternatives[i]} has zero similarity to both ideal points"
            )
        closeness.append(s_pos / (s_pos + s_neg))
    return rank_closeness(closeness)


# ---------------------------------------------------------------------------
# The monotone method: weighted order-compatible similarities.

def topsis_proposed(
    problem: DecisionProblem,
    metric: AdmissibleMetric | None = None,
    allow_non_admissible: bool = False,
) -> RankingResult:
    """Monotone ranking by weighted similarities to the ideal points.

    Normalizes cost columns by complement, takes componentwise-extreme
    ideal points, computes S+- = weighted similarity of each row to each
    ideal under the given order-compatible metric, and ranks by
    C = S+ / (S+ + S-).

    The default metric is the score-order metric with lambda = 100; a
    large lambda keeps the separated branch dominant, which is the
    recommended regime.  The denominator cannot vanish: S+ = 0 would
    need distance 1 to the positive ideal in every column, and distance
    1 occurs only on the pair <0,1>, <1,0>, forcing every row entry to
    <0,1>; the negative ideal then has membership 0 everywhere, sits at
    distance below 1 from the row, and makes S- positive.  This is
    asserted rather than handled.

    Monotone in the metric's order: pointwise dominance between rows
    implies the same ordering of their closeness degrees.  Metrics
    built from an aggregation pair without the joint-injectivity
    promise are refused unless allow_non_admissible is set.
    """
    if metric is None:
        metric = XYMetric(100.0)
    if not metric.admissible and not allow_non_admissible:
        raise ConfigMismatch(
            "metric's aggregation pair carries no joint-injectivity promise; "
            "pass allow_non_admissible=True to rank with it anyway"
        )
    weights = _require_scalar_weights(problem, "topsis_proposed")
    norm = normalize(problem)
    ideals = ideal_points(norm.matrix)
    closeness = []
    for row in norm.matrix:
        s_pos = weighted_similarity(metric, row, ideals.positive, weights)
        s_neg = weighted_similarity(metric, row, ideals.negative, weights)
        total = s_pos + s_neg
        assert total > 0.0, "similarity denominator vanished; metric is not admissible"
        closeness.append(s_pos / total)
    return rank_closeness(closeness)
