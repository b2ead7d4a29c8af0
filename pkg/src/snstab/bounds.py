"""Spectral bound calculators: Hoffman's ratio bound, Alon-Milman edge expansion,
and the stability versions of both.  All inputs and outputs are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .repr_spectra import cayley_spectrum, second_largest_modulus_nontrivial, second_smallest_eigenvalue


@dataclass(frozen=True)
class SpectralBoundInput:
    vertex_count: int
    degree: Fraction
    lambda_min: Fraction
    lambda_K: Fraction
    mu2: Fraction
    mu_M: Fraction

    def __post_init__(self):
        for name in ("degree", "lambda_min", "lambda_K", "mu2", "mu_M"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not self.lambda_min <= self.lambda_K <= self.degree:
            raise ValueError("need lambda_min <= lambda_K <= degree")
        if not 0 <= self.mu2 <= self.mu_M:
            raise ValueError("need 0 <= mu2 <= mu_M")
        if self.vertex_count < 1:
            raise ValueError("empty graph")


def hoffman_bound(inp: SpectralBoundInput) -> Fraction:
    """Independent sets have size at most -lambda_min |V| / (d - lambda_min)."""
    if not inp.lambda_min < 0 < inp.degree:
        raise ValueError("degenerate spectrum: need lambda_min < 0 < degree")
    return -inp.lambda_min * inp.vertex_count / (inp.degree - inp.lambda_min)


def hoffman_ratio(inp: SpectralBoundInput) -> Fraction:
    return hoffman_bound(inp) / inp.vertex_count


def hoffman_stability(inp: SpectralBoundInput, alpha) -> Fraction:
    """Upper bound on ||1_X - P_U 1_X||^2 for an independent X of measure alpha.

    The value is negative exactly when alpha exceeds the Hoffman ratio, i.e. no
    such independent set exists.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    lmin, lK = abs(inp.lambda_min), abs(inp.lambda_K)
    if lmin == lK:
        raise ValueError("|lambda_min| = |lambda_K|: bound undefined")
    return ((1 - alpha) * lmin - inp.degree * alpha) / (lmin - lK) * alpha


def alon_milman_bound(mu2, size: int, total: int) -> Fraction:
    """e(S, S^c) >= mu2 |S| |S^c| / |V|."""
    if not 0 <= size <= total:
        raise ValueError("need 0 <= |S| <= |V|")
    return Fraction(mu2) * size * (total - size) / total


def alon_milman_stability(mu2, mu_M, gamma, alpha) -> Fraction:
    """||1_S - P_U 1_S||^2 <= gamma alpha / (mu_M - mu2), alpha = |S|/|V|.

    gamma is the boundary excess per vertex of S:
    e(S, S^c) <= mu2 |S| |S^c| / |V| + gamma |S|.
    """
    mu2, mu_M, gamma, alpha = map(Fraction, (mu2, mu_M, gamma, alpha))
    if mu_M <= mu2:
        raise ValueError("need mu_M > mu2")
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    return gamma * alpha / (mu_M - mu2)


def boundary_excess_gamma(mu2, boundary: int, size: int, total: int) -> Fraction:
    """Smallest gamma >= 0 for which the stability hypothesis holds."""
    if size == 0:
        return Fraction(0)
    return max(Fraction(0), (boundary - alon_milman_bound(mu2, size, total)) / size)


def close_bound(n: int, delta, c) -> Fraction:
    """Transposition-graph specialization: delta n / (n-2) * c/n."""
    if n < 3:
        raise ValueError("needs n >= 3")
    return alon_milman_stability(n, 2 * n - 2, Fraction(delta) * n, Fraction(c) / n)


def derangement_input(n: int, lambda_k_rule: str = "modulus") -> SpectralBoundInput:
    """Bound input for the derangement graph Gamma_n.

    ``lambda_k_rule="modulus"`` takes the largest |lambda_alpha| over alpha outside
    {(n), (n-1,1)} (the U_1 application); ``"second"`` takes the smallest
    eigenvalue strictly above lambda_min.
    """
    rep = cayley_spectrum("derangement", n)
    if lambda_k_rule == "modulus":
        lk = -second_largest_modulus_nontrivial("derangement", n)[0]
    elif lambda_k_rule == "second":
        lk = second_smallest_eigenvalue("derangement", n)
    else:
        raise ValueError(f"unknown lambda_K rule {lambda_k_rule!r}")
    lk = max(lk, rep.lambda_min)
    mu_M = rep.mu_M if rep.mu_M is not None else rep.mu2
    return SpectralBoundInput(factorial(n), Fraction(rep.degree), rep.lambda_min, lk, rep.mu2, mu_M)


def largeclose_bound(n: int, alpha) -> Fraction:
    """Hoffman stability on Gamma_n with U = U_(n) + U_(n-1,1) and the exact |lambda_K|."""
    return hoffman_stability(derangement_input(n, "modulus"), alpha)
