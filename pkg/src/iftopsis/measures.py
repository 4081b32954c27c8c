"""Distance and similarity measures on intuitionistic fuzzy values.

Two families live here.

The classical three-term measures treat a finite universe of IFVs as a
vector and compare membership, non-membership and indeterminacy per
point: the normalized Hamming, Euclidean and Minkowski distances, the
ratio and complement-ratio similarity measures derived from them, a
published score functional with a documented collision, and a stretched
Euclidean distance whose level sets are degenerate.  Several of these
are kept verbatim including their defects (ratio measures exceeding 1,
monotonicity violations); they exist so the defects can be demonstrated,
and are marked non-axiomatic below.

The admissible metrics are order-compatible distances on single IFVs:
each keys on the defining functionals of a linear order and is a metric
bounded by 1, attaining 1 exactly on the pair <0,1>, <1,0>, and monotone
along its order.  The sharpness parameter lambda >= 1 controls how much
weight the leading functional gets; the plain 1/3-coefficient base
distance is the lambda = 1 case of the score-order metric.

Indeterminacy is always recomputed from mu and nu on the fly, never
stored, so the three-term measures cannot drift from their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, LengthMismatch, WeightError
from .values import IFV, Aggregation, apply_aggregation
from .orders import (
    AggregationOrder,
    KGammaOrder,
    LinearOrder,
    XYOrder,
    ZXOrder,
)

IfsVector = Sequence[IFV]

WEIGHT_SUM_TOL = 1e-9


def _require_same_length(xs: IfsVector, ys: IfsVector) -> None:
    if len(xs) != len(ys):
        raise LengthMismatch(f"vector lengths differ: {len(xs)} vs {len(ys)}")
    if len(xs) == 0:
        raise DomainError("measures need at least one universe point")


# ---------------------------------------------------------------------------
# Classical three-term distances.

def d_minkowski(p: float, xs: IfsVector, ys: IfsVector) -> float:
    """Normalized three-term Minkowski distance of order p >= 1.

    ((1/2n) * sum_j |dmu_j|^p + |dnu_j|^p + |dpi_j|^p)^(1/p), in [0, 1].
    """
    if p < 1.0:
        raise DomainError(f"Minkowski distance requires p >= 1, got {p}")
    _require_same_length(xs, ys)
    total = 0.0
    for a, b in zip(xs, ys):
        total += (
            abs(a.mu - b.mu) ** p
            + abs(a.nu - b.nu) ** p
            + abs(a.pi - b.pi) ** p
        )
    return (total / (2.0 * len(xs))) ** (1.0 / p)


def d_hamming(xs: IfsVector, ys: IfsVector) -> float:
    """Normalized three-term Hamming distance (Minkowski with p = 1)."""
    return d_minkowski(1.0, xs, ys)


def d_euclidean(xs: IfsVector, ys: IfsVector) -> float:
    """Normalized three-term Euclidean distance (Minkowski with p = 2)."""
    return d_minkowski(2.0, xs, ys)


# ---------------------------------------------------------------------------
# Classical similarity measures built on the distances above.

def _complement_vector(xs: IfsVector) -> list[IFV]:
    return [a.complement() for a in xs]


def sim_ratio_hamming(xs: IfsVector, ys: IfsVector) -> float:
    """Hamming ratio similarity d(I1, I2) / d(I1, I2^c).

    Non-axiomatic: the value may exceed 1.  Implemented verbatim so the
    defect can be reproduced.
    """
    den = d_hamming(xs, _complement_vector(ys))
    if den == 0.0:
        raise ZeroDivisionError("ratio similarity undefined: I2 complement equals I1")
    return d_hamming(xs, ys) / den


def sim_ratio_euclidean(xs: IfsVector, ys: IfsVector) -> float:
    """Euclidean ratio similarity d(I1, I2) / d(I1, I2^c).  Non-axiomatic."""
    den = d_euclidean(xs, _complement_vector(ys))
    if den == 0.0:
        raise ZeroDivisionError("ratio similarity undefined: I2 complement equals I1")
    return d_euclidean(xs, ys) / den


def sim_one_minus(p: float, xs: IfsVector, ys: IfsVector) -> float:
    """Minkowski similarity 1 - d_minkowski(p), in [0, 1].

    Violates the containment-monotonicity axiom; see the reproduction
    harness.
    """
    return 1.0 - d_minkowski(p, xs, ys)


def sim_xc_hamming(xs: IfsVector, ys: IfsVector) -> float:
    """Complement-ratio similarity d(I1,I2^c) / (d(I1,I2) + d(I1,I2^c))."""
    dc = d_hamming(xs, _complement_vector(ys))
    dd = d_hamming(xs, ys)
    if dd + dc == 0.0:
        raise ZeroDivisionError("complement-ratio similarity undefined: both distances vanish")
    return dc / (dd + dc)


def sim_xc_euclidean(xs: IfsVector, ys: IfsVector) -> float:
    """Euclidean variant of the complement-ratio similarity."""
    dc = d_euclidean(xs, _complement_vector(ys))
    dd = d_euclidean(xs, ys)
    if dd + dc == 0.0:
        raise ZeroDivisionError("complement-ratio similarity undefined: both distances vanish")
    return dc / (dd + dc)


def sim_classical(kind: str, xs: IfsVector, ys: IfsVector, p: float | None = None) -> float:
    """Dispatch a classical similarity measure by name.

    Kinds: sk_ratio_hamming, sk_ratio_euclid, one_minus_p (requires p),
    xc_hamming, xc_euclid.
    """
    kind = kind.lower()
    if kind == "sk_ratio_hamming":
        return sim_ratio_hamming(xs, ys)
    if kind == "sk_ratio_euclid":
        return sim_ratio_euclidean(xs, ys)
    if kind == "one_minus_p":
        if p is None:
            raise DomainError("one_minus_p requires the order p")
        return sim_one_minus(p, xs, ys)
    if kind == "xc_hamming":
        return sim_xc_hamming(xs, ys)
    if kind == "xc_euclid":
        return sim_xc_euclidean(xs, ys)
    raise DomainError(f"unknown similarity kind {kind!r}")


# ---------------------------------------------------------------------------
# A published score functional and a stretched distance, both kept for
# their documented degeneracies.

def s_ck(a: IFV) -> float:
    """Score functional (mu - nu) - pi * log2(2 - mu - nu) / 100.

    The log argument 2 - mu - nu lies in [1, 2], so the value is always
    defined.  Not injective on score-equal values: <0, 0> and
    <99/200, 101/200> both map to -1/100, which is the collision the
    reproduction harness demonstrates.
    """
    h = a.mu + a.nu
    return (a.mu - a.nu) - (1.0 - h) * math.log2(2.0 - h) / 100.0


def _stretch(a: IFV) -> tuple[float, float]:
    # common factor 1 + (2/3) pi (1 + pi) applied to both coordinates
    f = 1.0 + (2.0 / 3.0) * a.pi * (1.0 + a.pi)
    return a.mu * f, a.nu * f


def d_sh(a: IFV, b: IFV) -> float:
    """Euclidean distance between stretched coordinates.

    Both coordinates are scaled by 1 + (2/3) pi (1 + pi) before taking
    the two-term root-mean-square.  Symmetric and zero iff the arguments
    are equal, but its level sets around <0, 0> contain infinitely many
    IFVs, which d_sh_level_set exhibits.
    """
    ma, na = _stretch(a)
    mb, nb = _stretch(b)
    return math.sqrt(((ma - mb) ** 2 + (na - nb) ** 2) / 2.0)


def d_sh_level_residual(a: IFV, distance: float = 0.5) -> float:
    """Residual of the level-set equation for d_sh(a, <0,0>) = distance.

    Evaluates [1 + (2/3)(1-x-y)(2-x-y)]^2 (x^2 + y^2) - 2*distance^2,
    which is zero exactly on the level set.
    """
    x, y = a.mu, a.nu
    f = 1.0 + (2.0 / 3.0) * (1.0 - x - y) * (2.0 - x - y)
    return f * f * (x * x + y * y) - 2.0 * distance * distance


def d_sh_level_set(distance: float = 0.5, n_points: int = 5) -> list[IFV]:
    """Find distinct IFVs at the given d_sh distance from <0, 0>.

    Bisects along rays through the simplex; along each ray the distance
    from the origin grows strictly, so every ray whose boundary value
    reaches the target contains exactly one solution.  Returns only points whose level-set residual is below
    1e-9; for distances up to 1/sqrt(2) that is every requested ray.
    """
    if not 0.0 < distance < 1.0:
        raise DomainError(f"level-set distance must lie in (0, 1), got {distance}")
    if n_points < 1:
        raise DomainError("n_points must be positive")
    origin = IFV(0.0, 0.0)
    out: list[IFV] = []
    for k in range(n_points):
        theta = (math.pi / 2.0) * k / max(n_points - 1, 1)
        cx, cy = math.cos(theta), math.sin(theta)
        t_max = 1.0 / (cx + cy)
        if d_sh(IFV(cx * t_max, cy * t_max), origin) < distance:
            continue
        lo, hi = 0.0, t_max
        for _ in range(80):
            mid = (lo + hi) / 2.0
            if d_sh(IFV(cx * mid, cy * mid), origin) < distance:
                lo = mid
            else:
                hi = mid
        point = IFV(cx * hi, cy * hi)
        if abs(d_sh_level_residual(point, distance)) <= 1e-9:
            out.append(point)
    return out


# ---------------------------------------------------------------------------
# Admissible order-compatible metrics.

class AdmissibleMetric:
    """Common interface of the order-compatible metrics.

    Subclasses provide distance(a, b) and the matching linear order.
    All variants share the same two-branch shape: a separated branch
    scaled into (c, 1] when the leading functional differs, and a
    tiebreak branch scaled into [0, c) when it agrees, with the gap
    making the branch switch order-compatible.  Branch selection uses
    exact floating-point inequality, mirroring the exact tie semantics
    of the orders; a tolerance would break the triangle inequality near
    ties.
    """

    lam: float
    admissible: bool = True

    def _check_lam(self) -> None:
        if self.lam < 1.0:
            raise DomainError(f"metric sharpness requires lambda >= 1, got {self.lam}")

    def distance(self, a: IFV, b: IFV) -> float:
        raise NotImplementedError

    @property
    def order(self) -> LinearOrder:
        raise NotImplementedError


@dataclass(frozen=True)
class XYMetric(AdmissibleMetric):
    """Metric compatible with the score order.

    (1 + lam*|ds|) / (1 + 2*lam) when scores differ, else
    |dh| / (1 + 2*lam).  lam = 1 gives the 1/3-coefficient base metric.
    """

    lam: float = 100.0

    def __post_init__(self) -> None:
        self._check_lam()

    def distance(self, a: IFV, b: IFV) -> float:
        sa = a.mu - a.nu
        sb = b.mu - b.nu
        if sa != sb:
            return (1.0 + self.lam * abs(sa - sb)) / (1.0 + 2.0 * self.lam)
        return abs((a.mu + a.nu) - (b.mu + b.nu)) / (1.0 + 2.0 * self.lam)

    @property
    def order(self) -> LinearOrder:
        return XYOrder()


@dataclass(frozen=True)
class ZXMetric(AdmissibleMetric):
    """Metric compatible with the L-value order.

    (1 + lam*|dL|) / (1 + lam) when L-values differ, else
    |dh| / (1 + lam).
    """

    lam: float = 100.0

    def __post_init__(self) -> None:
        self._check_lam()

    def distance(self, a: IFV, b: IFV) -> float:
        la = a.l_value
        lb = b.l_value
        if la != lb:
            return (1.0 + self.lam * abs(la - lb)) / (1.0 + self.lam)
        return abs((a.mu + a.nu) - (b.mu + b.nu)) / (1.0 + self.lam)

    @property
    def order(self) -> LinearOrder:
        return ZXOrder()


@dataclass(frozen=True)
class AggMetric(AdmissibleMetric):
    """Metric compatible with a generic aggregation order.

    (1 + lam*|dA|) / (1 + lam) when the first images differ, else
    |dB| / (1 + lam), where A and B are the images of the aggregation
    pair.  The caller must declare the pair's joint injectivity; without
    it the zero-distance property fails on image-equal pairs and the
    metric is labeled non-admissible.
    """

    first: Aggregation
    second: Aggregation
    lam: float
    jointly_injective: bool

    def __post_init__(self) -> None:
        self._check_lam()

    @property
    def admissible(self) -> bool:  # type: ignore[override]
        return self.jointly_injective

    def distance(self, a: IFV, b: IFV) -> float:
        fa = apply_aggregation(self.first, a)
        fb = apply_aggregation(self.first, b)
        if fa != fb:
            return (1.0 + self.lam * abs(fa - fb)) / (1.0 + self.lam)
        ga = apply_aggregation(self.second, a)
        gb = apply_aggregation(self.second, b)
        return abs(ga - gb) / (1.0 + self.lam)

    @property
    def order(self) -> LinearOrder:
        return AggregationOrder(
            self.first, self.second, jointly_injective=self.jointly_injective
        )


@dataclass(frozen=True)
class KGammaMetric(AdmissibleMetric):
    """Aggregation metric for the pair (K_gamma1, K_gamma2).

    The image of <mu, nu> under K_gamma is mu + gamma*(1 - nu - mu), so
    the leading term compares |(1-gamma1)*dmu - gamma1*dnu|.  Requires
    gamma1 != gamma2, which makes the pair jointly injective.
    """

    gamma1: float
    gamma2: float
    lam: float = 100.0

    def __post_init__(self) -> None:
        self._check_lam()
        for g in (self.gamma1, self.gamma2):
            if not 0.0 <= g <= 1.0:
                raise DomainError(f"gamma must lie in [0, 1], got {g}")
        if self.gamma1 == self.gamma2:
            raise DomainError("KGammaMetric requires gamma1 != gamma2")

    def distance(self, a: IFV, b: IFV) -> float:
        g1 = self.gamma1
        fa = a.mu + g1 * (1.0 - a.nu - a.mu)
        fb = b.mu + g1 * (1.0 - b.nu - b.mu)
        if fa != fb:
            return (1.0 + self.lam * abs(fa - fb)) / (1.0 + self.lam)
        g2 = self.gamma2
        ga = a.mu + g2 * (1.0 - a.nu - a.mu)
        gb = b.mu + g2 * (1.0 - b.nu - b.mu)
        return abs(ga - gb) / (1.0 + self.lam)

    @property
    def order(self) -> LinearOrder:
        return KGammaOrder(self.gamma1, self.gamma2)


def rho(metric: AdmissibleMetric, a: IFV, b: IFV) -> float:
    """Distance between two IFVs under the given admissible metric."""
    return metric.distance(a, b)


def check_weights(weights: Sequence[float]) -> tuple[float, ...]:
    """Validate a scalar weight vector: each in (0, 1], summing to 1."""
    ws = tuple(float(w) for w in weights)
    if len(ws) == 0:
        raise WeightError("weight vector is empty")
    for w in ws:
        if not 0.0 < w <= 1.0:
            raise WeightError(f"weights must lie in (0, 1], got {w}")
    total = sum(ws)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise WeightError(f"weights sum to {total!r}, expected 1")
    return ws


def weighted_similarity(
    metric: AdmissibleMetric,
    row: IfsVector,
    ideal: IfsVector,
    weights: Sequence[float],
) -> float:
    """Weighted similarity 1 - sum_j w_j * rho(row_j, ideal_j).

    Weights must be positive and sum to 1, so the result stays in
    [0, 1].
    """
    _require_same_length(row, ideal)
    ws = check_weights(weights)
    if len(ws) != len(row):
        raise LengthMismatch(f"{len(ws)} weights for {len(row)} attributes")
    acc = 0.0
    for w, a, b in zip(ws, row, ideal):
        acc += w * metric.distance(a, b)
    return 1.0 - acc
