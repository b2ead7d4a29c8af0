"""Exact coset statistics of a family A in S_n and the projection of 1_A onto U_1.

With ``a_ij = |A ∩ T_ij| / (n-1)!`` and ``c = |A| / (n-1)!`` the shifted matrix
``b_ij = a_ij - c/n`` has zero row and column sums.  The functions

    g = sum_ij a_ij 1_{T_ij},    h = g - c = sum_ij b_ij 1_{T_ij}

are affine images of the projection f_1 of f = 1_A onto U_1:
``g = n/(n-1) f_1 + (n-2)/(n-1) c``.  Everything here is exact (Fraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .perms import PermFamily, Permutation


@dataclass(frozen=True)
class CosetMatrix:
    n: int
    c: Fraction
    counts: tuple[tuple[int, ...], ...]
    a: tuple[tuple[Fraction, ...], ...]
    b: tuple[tuple[Fraction, ...], ...]

    def entries(self):
        """Yield ``(i, j, b_ij)`` with 1-based i, j."""
        for i, row in enumerate(self.b, start=1):
            for j, x in enumerate(row, start=1):
                yield i, j, x


@dataclass(frozen=True)
class SpectralSummary:
    n: int
    c: Fraction
    eps1: Fraction
    m2: Fraction
    m3: Fraction
    sumsq: Fraction
    sumcube: Fraction


def coset_counts(A: PermFamily) -> np.ndarray:
    """Integer matrix ``|A ∩ T_ij|`` (0-based indices)."""
    n = A.n
    counts = np.zeros((n, n), dtype=np.int64)
    if A.size == 0:
        return counts
    M = A.members().astype(np.int64) - 1
    for i in range(n):
        counts[i] = np.bincount(M[:, i], minlength=n)
    return counts


def coset_matrix(A: PermFamily) -> CosetMatrix:
    n = A.n
    if n < 2:
        raise ValueError("coset matrix needs n >= 2")
    counts = coset_counts(A)
    fm1 = factorial(n - 1)
    c = Fraction(A.size, fm1)
    a = tuple(tuple(Fraction(int(x), fm1) for x in row) for row in counts)
    b = tuple(tuple(x - c / n for x in row) for row in a)
    return CosetMatrix(n, c, tuple(tuple(int(x) for x in row) for row in counts), a, b)


def _scaled_b(A: PermFamily) -> np.ndarray:
    # b_ij * n! = n |A ∩ T_ij| - |A|
    return A.n * coset_counts(A) - A.size


def f_g_h_values(A: PermFamily, p: Permutation) -> tuple[Fraction, Fraction, Fraction]:
    """Return ``(f_1(p), g(p), h(p))``."""
    n = A.n
    if n < 2:
        raise ValueError("needs n >= 2")
    if p.n != n:
        raise ValueError("permutation and family sizes differ")
    counts = coset_counts(A)
    fm1 = factorial(n - 1)
    c = Fraction(A.size, fm1)
    g = Fraction(sum(int(counts[i, p.images[i] - 1]) for i in range(n)), fm1)
    f1 = ((n - 1) * g - (n - 2) * c) / n
    return f1, g, g - c


def project_u1(A: PermFamily, p: Permutation) -> Fraction:
    return f_g_h_values(A, p)[0]


def sum_b_powers(A: PermFamily) -> tuple[Fraction, Fraction]:
    """``(sum b_ij^2, sum b_ij^3)`` exactly."""
    B = _scaled_b(A).astype(object)
    N = factorial(A.n)
    return Fraction(int((B ** 2).sum()), N ** 2), Fraction(int((B ** 3).sum()), N ** 3)


def expected_f1_squared(A: PermFamily) -> Fraction:
    """E[f_1^2] = ((n-1) sum b^2 + c^2) / n^2, from f_1 = ((n-1) h + c)/n and E[h^2] = sum b^2/(n-1)."""
    n = A.n
    if n < 2:
        raise ValueError("needs n >= 2")
    c = Fraction(A.size, factorial(n - 1))
    sumsq, _ = sum_b_powers(A)
    return ((n - 1) * sumsq + c * c) / (n * n)


def distance_to_u1(A: PermFamily) -> Fraction:
    """E[(f - f_1)^2] = E[f] - E[f_1^2]."""
    return Fraction(A.size, factorial(A.n)) - expected_f1_squared(A)


def eps1(A: PermFamily) -> Fraction:
    """The normalized distance: E[(f - f_1)^2] = eps1 * c / n (0 for the empty family)."""
    if A.size == 0:
        return Fraction(0)
    return distance_to_u1(A) * factorial(A.n) / A.size


def moments(A: PermFamily) -> SpectralSummary:
    n = A.n
    if n < 3:
        raise ValueError("E[h^3] identity requires n >= 3")
    c = Fraction(A.size, factorial(n - 1))
    sumsq, sumcube = sum_b_powers(A)
    return SpectralSummary(
        n=n,
        c=c,
        eps1=eps1(A),
        m2=sumsq / (n - 1),
        m3=n * sumcube / ((n - 1) * (n - 2)),
        sumsq=sumsq,
        sumcube=sumcube,
    )


def expected_g2(n: int, c: Fraction, eps1: Fraction) -> Fraction:
    return c * c * (1 - Fraction(1, (n - 1) ** 2)) + (1 + Fraction(1, n - 1)) ** 2 * c / n * (1 - eps1)


def expected_h2(n: int, c: Fraction, eps1: Fraction) -> Fraction:
    return (1 + Fraction(1, n - 1)) ** 2 * c / n * (1 - eps1) - c * c / (n - 1) ** 2


def expected_g3(S: SpectralSummary) -> Fraction:
    """E[g^3] = E[h^3] + 3c E[h^2] + c^3 (E[h] = 0)."""
    return S.m3 + 3 * S.c * S.m2 + S.c ** 3
