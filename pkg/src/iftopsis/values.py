"""Intuitionistic fuzzy values and their basic algebra.

An intuitionistic fuzzy value (IFV) is a pair <mu, nu> of a membership
degree and a non-membership degree with mu, nu in [0, 1] and mu + nu <= 1.
The unallocated mass pi = 1 - mu - nu is the indeterminacy degree.

This module provides the value type itself, its derived scalar
functionals (score, accuracy, L-value), the seven classical operational
laws (complement, meet, join, probabilistic sum and product, scalar
multiple, power), and monotone aggregation functions on [0, 1]^2 used to
build admissible orders, in particular the convex-combination family
K_gamma(x, y) = x + gamma * (y - x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError

# Slack for mu + nu <= 1 under binary floating point.  Exact reals need
# none; results of the operational laws can overshoot by a few ulp.
CONSTRUCTION_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class IFV:
    """An immutable intuitionistic fuzzy value <mu, nu>.

    Equality and hashing are exact coordinate equality.  Derived
    functionals are computed on demand and never cached, so they cannot
    go stale.
    """

    mu: float
    nu: float

    def __post_init__(self) -> None:
        mu, nu = self.mu, self.nu
        if not (np.isfinite(mu) and np.isfinite(nu)):
            raise DomainError(f"IFV coordinates must be finite, got <{mu}, {nu}>")
        if not (0.0 <= mu <= 1.0 and 0.0 <= nu <= 1.0):
            raise DomainError(f"IFV coordinates must lie in [0, 1], got <{mu}, {nu}>")
        if mu + nu > 1.0 + CONSTRUCTION_TOL:
            raise DomainError(f"IFV requires mu + nu <= 1, got <{mu}, {nu}>")

    @property
    def pi(self) -> float:
        """Indeterminacy degree 1 - mu - nu, clamped at 0."""
        return max(1.0 - self.mu - self.nu, 0.0)

    @property
    def score(self) -> float:
        """Score degree s = mu - nu, in [-1, 1]."""
        return self.mu - self.nu

    @property
    def accuracy(self) -> float:
        """Accuracy degree h = mu + nu, in [0, 1]."""
        return self.mu + self.nu

    @property
    def l_value(self) -> float:
        """L-value (1 - nu) / (1 + pi).

        The denominator is at least 1, so the functional is total.  It
        equals 0 exactly at <0, 1> and 1 exactly at <1, 0>.
        """
        return (1.0 - self.nu) / (1.0 + self.pi)

    def complement(self) -> "IFV":
        """The complement <nu, mu>."""
        return IFV(self.nu, self.mu)

    def __repr__(self) -> str:
        return f"IFV({self.mu!r}, {self.nu!r})"

    def __str__(self) -> str:
        return f"<{self.mu:g}, {self.nu:g}>"


def make_ifv(mu: float, nu: float) -> IFV:
    """Validate and build an IFV from raw coordinates."""
    return IFV(float(mu), float(nu))


# ---------------------------------------------------------------------------
# The seven operational laws.

def complement(a: IFV) -> IFV:
    """<nu, mu>."""
    return IFV(a.nu, a.mu)


def meet(a: IFV, b: IFV) -> IFV:
    """Intersection <min(mu_a, mu_b), max(nu_a, nu_b)>."""
    return IFV(min(a.mu, b.mu), max(a.nu, b.nu))


def join(a: IFV, b: IFV) -> IFV:
    """Union <max(mu_a, mu_b), min(nu_a, nu_b)>."""
    return IFV(max(a.mu, b.mu), min(a.nu, b.nu))


def prob_sum(a: IFV, b: IFV) -> IFV:
    """Probabilistic sum <mu_a + mu_b - mu_a*mu_b, nu_a*nu_b>."""
    return IFV(a.mu + b.mu - a.mu * b.mu, a.nu * b.nu)


def prob_product(a: IFV, b: IFV) -> IFV:
    """Probabilistic product <mu_a*mu_b, nu_a + nu_b - nu_a*nu_b>."""
    return IFV(a.mu * b.mu, a.nu + b.nu - a.nu * b.nu)


def scale(lam: float, a: IFV) -> IFV:
    """Scalar multiple <1 - (1 - mu)^lam, nu^lam> for lam > 0."""
    if lam <= 0.0:
        raise DomainError(f"scale requires lambda > 0, got {lam}")
    return IFV(1.0 - (1.0 - a.mu) ** lam, a.nu**lam)


def power(a: IFV, lam: float) -> IFV:
    """Power <mu^lam, 1 - (1 - nu)^lam> for lam > 0."""
    if lam <= 0.0:
        raise DomainError(f"power requires lambda > 0, got {lam}")
    return IFV(a.mu**lam, 1.0 - (1.0 - a.nu) ** lam)


# ---------------------------------------------------------------------------
# Aggregation functions.

def _check_aggregation(fn: Callable[[float, float], float], samples: int, seed: int) -> None:
    # Sampling can refute monotonicity or the corner conditions, never
    # prove them; documented limitation.
    if abs(fn(0.0, 0.0)) > 1e-12 or abs(fn(1.0, 1.0) - 1.0) > 1e-12:
        raise DomainError("aggregation must map (0,0) to 0 and (1,1) to 1")
    rng = np.random.default_rng(seed)
    pts = rng.random((samples, 4))
    for x, y, dx, dy in pts:
        lo = fn(x, y)
        if not 0.0 <= lo <= 1.0:
            raise DomainError(f"aggregation left [0, 1] at ({x}, {y})")
        if fn(min(x + dx, 1.0), y) < lo - 1e-12 or fn(x, min(y + dy, 1.0)) < lo - 1e-12:
            raise DomainError("aggregation is not nondecreasing in each argument")


@dataclass(frozen=True)
class Aggregation:
    """A monotone map [0, 1]^2 -> [0, 1] fixing the corners.

    The constructor sample-checks monotonicity and the corner conditions
    (it cannot prove them).  Whether a pair of aggregations is jointly
    injective, as required for building an admissible order, is the
    caller's obligation and is declared on the order, not here.
    """

    fn: Callable[[float, float], float]
    name: str = ""
    samples: int = field(default=1000, repr=False)
    seed: int = field(default=20870, repr=False)

    def __post_init__(self) -> None:
        _check_aggregation(self.fn, self.samples, self.seed)

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)


def k_gamma(gamma: float) -> Aggregation:
    """The convex combination K_gamma(x, y) = x + gamma * (y - x)."""
    if not 0.0 <= gamma <= 1.0:
        raise DomainError(f"k_gamma requires gamma in [0, 1], got {gamma}")
    g = float(gamma)
    return Aggregation(lambda x, y: x + g * (y - x), name=f"K_{g:g}")


def apply_aggregation(f: Callable[[float, float], float], a: IFV) -> float:
    """Evaluate f on the pair (mu, 1 - nu).

    This is the image through which an aggregation function sees an IFV
    when used to compare values: the second argument is the membership
    bound 1 - nu rather than nu itself.
    """
    return f(a.mu, 1.0 - a.nu)
