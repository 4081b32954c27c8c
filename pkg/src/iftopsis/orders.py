"""Partial and admissible linear orders on intuitionistic fuzzy values.

The componentwise partial order (mu up, nu down) leaves many pairs
incomparable.  Three families of linear refinements are provided:

* the score order: score degree first, accuracy degree as tiebreak;
* the L-value order: L-value first, accuracy degree as tiebreak;
* aggregation orders: images under a pair (A, B) of aggregation
  functions compared lexicographically, with the convex-combination
  specialization (K_gamma1, K_gamma2) for gamma1 != gamma2.

Comparators return -1, 0 or 1 in the usual cmp convention; the partial
comparison returns None for incomparable pairs.  Ties are decided by
exact floating-point equality on purpose: any tolerance band would break
transitivity, which the property suite asserts.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DomainError, LengthMismatch
from .values import IFV, Aggregation, apply_aggregation, k_gamma

LESS, EQUAL, GREATER = -1, 0, 1


def _cmp(x: float, y: float) -> int:
    if x < y:
        return LESS
    if x > y:
        return GREATER
    return EQUAL


def partial_cmp(a: IFV, b: IFV) -> int | None:
    """Componentwise comparison; None when the pair is incomparable.

    a is below b when mu_a <= mu_b and nu_a >= nu_b, with equality only
    for coordinate-identical values.
    """
    if a.mu == b.mu and a.nu == b.nu:
        return EQUAL
    if a.mu <= b.mu and a.nu >= b.nu:
        return LESS
    if a.mu >= b.mu and a.nu <= b.nu:
        return GREATER
    return None


def cmp_xy(a: IFV, b: IFV) -> int:
    """Score order: score degree first, accuracy degree on an exact tie."""
    c = _cmp(a.score, b.score)
    if c != EQUAL:
        return c
    return _cmp(a.accuracy, b.accuracy)


def cmp_zx(a: IFV, b: IFV) -> int:
    """L-value order: L-value first, accuracy degree on an exact tie."""
    c = _cmp(a.l_value, b.l_value)
    if c != EQUAL:
        return c
    return _cmp(a.accuracy, b.accuracy)


def cmp_agg(
    first: Callable[[float, float], float],
    second: Callable[[float, float], float],
    a: IFV,
    b: IFV,
) -> int:
    """Lexicographic comparison of aggregation images.

    Compares first(mu, 1-nu), then second(mu, 1-nu) on an exact tie.
    Linearity requires (first, second) to be jointly injective, which is
    the caller's obligation; without it the comparison is a preorder.
    """
    c = _cmp(apply_aggregation(first, a), apply_aggregation(first, b))
    if c != EQUAL:
        return c
    return _cmp(apply_aggregation(second, a), apply_aggregation(second, b))


class LinearOrder:
    """Common interface of the total comparators."""

    #: False for aggregation orders built without the injectivity promise.
    admissible: bool = True

    def compare(self, a: IFV, b: IFV) -> int:
        raise NotImplementedError

    def leq(self, a: IFV, b: IFV) -> bool:
        return self.compare(a, b) <= 0

    def lt(self, a: IFV, b: IFV) -> bool:
        return self.compare(a, b) < 0

    def sort(self, values: Iterable[IFV]) -> list[IFV]:
        return sorted(values, key=functools.cmp_to_key(self.compare))


@dataclass(frozen=True)
class XYOrder(LinearOrder):
    """The score-then-accuracy admissible order."""

    def compare(self, a: IFV, b: IFV) -> int:
        return cmp_xy(a, b)


@dataclass(frozen=True)
class ZXOrder(LinearOrder):
    """The L-value-then-accuracy admissible order."""

    def compare(self, a: IFV, b: IFV) -> int:
        return cmp_zx(a, b)


@dataclass(frozen=True)
class AggregationOrder(LinearOrder):
    """Order induced by a pair of aggregation functions.

    The caller must declare whether the pair is jointly injective.
    Without the promise the comparator still works but degrades to a
    preorder (distinct values can compare equal); it is labeled
    non-admissible and the ranking method refuses it unless overridden.
    """

    first: Aggregation
    second: Aggregation
    jointly_injective: bool

    @property
    def admissible(self) -> bool:  # type: ignore[override]
        return self.jointly_injective

    def compare(self, a: IFV, b: IFV) -> int:
        return cmp_agg(self.first, self.second, a, b)


@dataclass(frozen=True)
class KGammaOrder(LinearOrder):
    """Aggregation order for the pair (K_gamma1, K_gamma2).

    Joint injectivity holds exactly when gamma1 != gamma2 (the image map
    is linear with determinant gamma2 - gamma1), so that inequality is
    enforced at construction.
    """

    gamma1: float
    gamma2: float

    def __post_init__(self) -> None:
        for g in (self.gamma1, self.gamma2):
            if not 0.0 <= g <= 1.0:
                raise DomainError(f"gamma must lie in [0, 1], got {g}")
        if self.gamma1 == self.gamma2:
            raise DomainError("KGammaOrder requires gamma1 != gamma2")

    def compare(self, a: IFV, b: IFV) -> int:
        g1, g2 = self.gamma1, self.gamma2
        c = _cmp(a.mu + g1 * (1.0 - a.nu - a.mu), b.mu + g1 * (1.0 - b.nu - b.mu))
        if c != EQUAL:
            return c
        return _cmp(a.mu + g2 * (1.0 - a.nu - a.mu), b.mu + g2 * (1.0 - b.nu - b.mu))

    def as_aggregation_order(self) -> AggregationOrder:
        return AggregationOrder(
            k_gamma(self.gamma1), k_gamma(self.gamma2), jointly_injective=True
        )


@dataclass(frozen=True)
class AtanassovOrder:
    """The componentwise partial order, for pointwise vector tests."""

    admissible = False

    def compare(self, a: IFV, b: IFV) -> int | None:
        return partial_cmp(a, b)

    def leq(self, a: IFV, b: IFV) -> bool:
        c = partial_cmp(a, b)
        return c is not None and c <= 0


def vector_leq(
    order: LinearOrder | AtanassovOrder,
    xs: Sequence[IFV],
    ys: Sequence[IFV],
) -> bool:
    """True iff xs[j] <= ys[j] under the order for every index j.

    Under the partial order an incomparable coordinate makes the answer
    False.
    """
    if len(xs) != len(ys):
        raise LengthMismatch(f"vector lengths differ: {len(xs)} vs {len(ys)}")
    return all(order.leq(x, y) for x, y in zip(xs, ys))
