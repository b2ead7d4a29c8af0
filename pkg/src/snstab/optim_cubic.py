"""Minimizing E[g^3] over nonnegative g with fixed mean and bounded L2 distance
from a two-level step function F, and the resulting lower bound on E[g^3] for
g = (1 + 1/(n-1)) f_1 + (1 - 1/(n-1)) c.

A two-level g is parametrized by delta: g = H - (1-theta) delta on [0, theta)
and L + theta delta on [theta, 1], which keeps E[g] = E[F].  The constraint
reads theta (1-theta) delta^2 <= eta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .interval import Interval, exact_sqrt, sqrt_bounds, sqrt_upper


@dataclass(frozen=True)
class CubicProblem:
    theta: Fraction
    H: Fraction
    L: Fraction
    eta: Fraction

    def __post_init__(self):
        for name in ("theta", "H", "L", "eta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not 0 < self.theta < 1:
            raise ValueError("theta must lie in (0, 1)")
        if not self.H > self.L >= 0:
            raise ValueError("need H > L >= 0")
        if self.eta < 0:
            raise ValueError("eta must be non-negative")

    @property
    def mean(self) -> Fraction:
        return self.theta * self.H + (1 - self.theta) * self.L

    @property
    def EF3(self) -> Fraction:
        return self.theta * self.H ** 3 + (1 - self.theta) * self.L ** 3

    @property
    def delta_sq_budget(self) -> Fraction:
        """eta / (theta (1 - theta)): the largest feasible delta^2."""
        return self.eta / (self.theta * (1 - self.theta))


@dataclass(frozen=True)
class QPrimeSolution:
    delta: Fraction | Interval
    objective: Fraction | Interval
    clamped: bool

    @property
    def exact(self) -> bool:
        return isinstance(self.objective, Fraction)

    def objective_lower(self) -> Fraction:
        return self.objective if self.exact else self.objective.lo


def qprime_objective(p: CubicProblem, delta):
    t = p.theta
    return t * (p.H - (1 - t) * delta) ** 3 + (1 - t) * (p.L + t * delta) ** 3


def qprime_derivative(p: CubicProblem, delta):
    t = p.theta
    return 3 * t * (1 - t) * (delta - (p.H - p.L)) * (p.L + p.H - (1 - 2 * t) * delta)


def solve_qprime(p: CubicProblem) -> QPrimeSolution:
    """Minimize the two-level objective.

    The objective decreases in delta up to H - L (where g is constant), so the
    minimizer is sqrt(eta / (theta (1-theta))) unless that exceeds H - L, in
    which case the solution is clamped to delta = H - L.
    """
    budget = p.delta_sq_budget
    gap = p.H - p.L
    if budget >= gap * gap:
        return QPrimeSolution(gap, p.mean ** 3, True)
    root = exact_sqrt(budget)
    if root is not None:
        return QPrimeSolution(root, qprime_objective(p, root), False)
    lo, hi = sqrt_bounds(budget)
    hi = min(hi, gap)
    # decreasing on [0, H - L]: the endpoints bracket the optimum value
    obj = Interval(qprime_objective(p, hi), qprime_objective(p, lo))
    return QPrimeSolution(Interval(lo, hi), obj, False)


def qprime_closed_form(p: CubicProblem) -> Interval:
    """E[F^3] - 3(H^2-L^2) sqrt(theta(1-theta)) eta^1/2 + 3((1-theta)H + theta L) eta
    - (1-2 theta)/sqrt(theta(1-theta)) eta^3/2, enclosed in an interval."""
    t, eta = p.theta, p.eta
    s = Interval(t * (1 - t)).sqrt()
    r = Interval(eta).sqrt()
    return (
        p.EF3
        - 3 * (p.H ** 2 - p.L ** 2) * s * r
        + 3 * ((1 - t) * p.H + t * p.L) * eta
        - (1 - 2 * t) / s * r * eta
    )


# the moment bound for g ---------------------------------------------------------

def expected_F3(n: int, c) -> Fraction:
    c = Fraction(c)
    d = Fraction(1, (n - 1) ** 3)
    return c ** 3 * (n - 2) ** 2 * (n + 1) * d + 3 * c * c * n * (n - 2) * d + c * n * n * d


def eg3_problem(n: int, c, eps1) -> CubicProblem:
    c, eps1 = Fraction(c), Fraction(eps1)
    k = Fraction(1, n - 1)
    return CubicProblem(
        theta=c / n,
        H=(1 - k) * c + 1 + k,
        L=(1 - k) * c,
        eta=Fraction(n, n - 1) ** 2 * eps1 * c / n,
    )


def _eg3_check(n: int, c: Fraction, eps1: Fraction) -> None:
    if n < 3:
        raise ValueError("needs n >= 3")
    if not 0 < c <= Fraction(n, 2):
        raise ValueError(f"need 0 < c <= n/2, got c = {c}")
    if not 0 <= eps1 <= 1 - c / n:
        raise ValueError(f"need 0 <= eps1 <= 1 - c/n, got eps1 = {eps1}")


def eg3_lower_bound(n: int, c, eps1, *, require_hypothesis: bool = True) -> Fraction:
    """E[F^3] - 27/4 (3c^2 + 2c) eps1^1/2 / n, with the root rounded up so the result is a sound lower bound.

    The bound is proved for 0 < c <= n/2; ``require_hypothesis=False`` evaluates
    the expression anyway (it is only meaningful as an empirical check there).
    """
    c, eps1 = Fraction(c), Fraction(eps1)
    if require_hypothesis:
        _eg3_check(n, c, eps1)
    elif n < 3 or eps1 < 0:
        raise ValueError("needs n >= 3 and eps1 >= 0")
    return expected_F3(n, c) - Fraction(27, 4) * (3 * c * c + 2 * c) * sqrt_upper(eps1) / n


def eg3_tight_expression(n: int, c, eps1) -> Interval:
    """The optimum of the two-level problem written in n, c, eps1 before simplification."""
    c, eps1 = Fraction(c), Fraction(eps1)
    _eg3_check(n, c, eps1)
    k = Fraction(1, n - 1)
    x = c / n
    root_e = Interval(eps1).sqrt()
    root_1x = Interval(1 - x).sqrt()
    return (
        expected_F3(n, c)
        - 3 * (1 + k) * ((1 + k) ** 2 + 2 * c * (1 - k * k)) * root_1x * root_e * x
        + 3 * ((1 - k) * c + (1 - x) * (1 + k)) * n * c * k * k * eps1
        - (1 - 2 * x) / root_1x * (1 + k) ** 3 * root_e * eps1 * x
    )


def eg3_tight_bound(n: int, c, eps1) -> Fraction:
    """Sound lower bound on E[g^3] from the exact two-level optimum."""
    c, eps1 = Fraction(c), Fraction(eps1)
    _eg3_check(n, c, eps1)
    return solve_qprime(eg3_problem(n, c, eps1)).objective_lower()


# the averaging step ---------------------------------------------------------------

def _moments(pieces, level):
    mass = sum(Fraction(w) for w, _ in pieces)
    mean = sum(Fraction(w) * Fraction(v) for w, v in pieces) / mass
    cube = sum(Fraction(w) * Fraction(v) ** 3 for w, v in pieces)
    sq = sum(Fraction(w) * (Fraction(v) - level) ** 2 for w, v in pieces)
    return mass, mean, cube, sq


def averaging_reduction_check(theta, H, L, left: Sequence[tuple], right: Sequence[tuple]) -> bool:
    """Step function g given as (width, value) pieces on [0, theta) and [theta, 1].

    True iff replacing g by its averages on both parts weakly decreases both
    E[g^3] and E[(g - F)^2].
    """
    theta, H, L = Fraction(theta), Fraction(H), Fraction(L)
    ml, al, cl, sl = _moments(left, H)
    mr, ar, cr, sr = _moments(right, L)
    if ml != theta or mr != 1 - theta:
        raise ValueError("piece widths must sum to theta and 1 - theta")
    if any(Fraction(v) < 0 for _, v in list(left) + list(right)):
        raise ValueError("g must be non-negative")
    cube_avg = theta * al ** 3 + (1 - theta) * ar ** 3
    sq_avg = theta * (al - H) ** 2 + (1 - theta) * (ar - L) ** 2
    return cube_avg <= cl + cr and sq_avg <= sl + sr
