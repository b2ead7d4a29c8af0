"""Reconstruct a union of round(c) 1-cosets from a family close to U_1.

The recipe follows the quasi-stability argument: sort the entries of the coset
matrix B in non-increasing order, keep the round(c) largest, and take the union
of the corresponding 1-cosets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, floor

import numpy as np

from .coset_spectral import coset_matrix, eps1 as _eps1
from .interval import sqrt_lower
from .perms import Coset, PermFamily
from .report import Check, compare

DEFAULT_C0 = Fraction(100)
DEFAULT_EPS0 = Fraction(1, 10)


class ReconstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Reconstruction:
    n: int
    cosets: tuple[Coset, ...]
    m_half: int
    c: Fraction
    round_c: int
    symdiff: int
    bound_ok: bool
    eps1: Fraction
    sorted_entries: tuple[Fraction, ...] = field(repr=False)


def round_half_up(x: Fraction) -> int:
    return floor(Fraction(x) + Fraction(1, 2))


def union_size(n: int, cosets) -> int:
    """|T_{i1 j1} ∪ ... ∪ T_{ik jk}| by inclusion-exclusion.

    A set of distinct 1-cosets meets iff their i's are distinct and their j's
    are distinct, in which case the intersection has (n - k)! elements.
    """
    cosets = list(dict.fromkeys(cosets))
    total = 0
    for k in range(1, len(cosets) + 1):
        for sub in combinations(cosets, k):
            if len({T.i for T in sub}) == k and len({T.j for T in sub}) == k:
                total += (-1) ** (k + 1) * factorial(n - k)
    return total


def members_covered(A: PermFamily, cosets) -> int:
    """|A ∩ (union of cosets)|."""
    if A.size == 0 or not cosets:
        return 0
    M = A.members()
    hit = np.zeros(A.size, dtype=bool)
    for T in cosets:
        hit |= M[:, T.i - 1] == T.j
    return int(hit.sum())


def symmetric_difference(A: PermFamily, cosets) -> int:
    return A.size + union_size(A.n, cosets) - 2 * members_covered(A, cosets)


def closed_form_F(n: int, c) -> Fraction:
    """Sum of squared coset-matrix entries of a dictatorship of c cosets."""
    if n < 3:
        raise ValueError("needs n >= 3")
    c = Fraction(c)
    return c * (n - c) / (n - 1)


def closed_form_G(n: int, c) -> Fraction:
    """Sum of cubed coset-matrix entries of a dictatorship of c cosets."""
    if n < 3:
        raise ValueError("needs n >= 3")
    c = Fraction(c)
    return (
        c * (1 - Fraction(1, (n - 1) ** 2))
        - c * c * Fraction(3 * (n - 2), (n - 1) ** 2)
        + c ** 3 * Fraction(2 * (n - 2), n * (n - 1) ** 2)
    )


def _rate_lower(c: Fraction, n: int, e1: Fraction, c0: Fraction) -> Fraction:
    # C0 c^2 (sqrt(eps1) + 1/n), rounded down
    return c0 * c * c * (sqrt_lower(e1) + Fraction(1, n))


def reconstruct(A: PermFamily, c0=DEFAULT_C0) -> Reconstruction:
    n = A.n
    if n < 3:
        raise ReconstructionError("reconstruction needs n >= 3")
    if A.size == 0:
        raise ReconstructionError("empty family")
    cm = coset_matrix(A)
    c = cm.c
    if c > Fraction(n, 2):
        raise ReconstructionError(f"c = {c} exceeds n/2 = {Fraction(n, 2)}")
    rc = round_half_up(c)
    if rc == 0:
        raise ReconstructionError(f"round(c) = 0 for c = {c}: nothing to reconstruct")
    # non-increasing by value, ties by ascending (i, j)
    order = sorted(cm.entries(), key=lambda t: (-t[2], t[0], t[1]))
    xs = tuple(x for _, _, x in order)
    m_half = sum(1 for x in xs if x >= Fraction(1, 2))
    cosets = tuple(Coset(i, j) for i, j, _ in order[:rc])
    sd = symmetric_difference(A, cosets)
    e1 = _eps1(A)
    ok = Fraction(sd, factorial(n)) <= _rate_lower(c, n, e1, Fraction(c0)) / n
    return Reconstruction(n, cosets, m_half, c, rc, sd, ok, e1, xs)


@dataclass(frozen=True)
class CertifyReport:
    n: int
    c: Fraction
    eps1: Fraction
    c0: Fraction
    eps0: Fraction
    hypothesis_ok: bool
    reconstruction: Reconstruction | None
    note: str
    checks: tuple[Check, ...]


def certify(A: PermFamily, c0=DEFAULT_C0, eps0=DEFAULT_EPS0) -> CertifyReport:
    """Evaluate both sides of the quasi-stability bounds with caller constants.

    Violations are recorded in the returned checks, never raised.
    """
    c0, eps0 = Fraction(c0), Fraction(eps0)
    n = A.n
    e1 = _eps1(A) if n >= 2 else Fraction(0)
    c = Fraction(A.size, factorial(n - 1))
    checks = [compare("hypothesis: eps1 <= eps0", e1, eps0, "<=")]
    try:
        rec = reconstruct(A, c0)
    except ReconstructionError as exc:
        return CertifyReport(n, c, e1, c0, eps0, False, None, str(exc), tuple(checks))
    hyp = checks[0].passed and c <= Fraction(n, 2)

    lhs = Fraction(rec.symdiff, factorial(n))
    rhs = _rate_lower(c, n, e1, c0) / n
    checks.append(compare("expbound: E[(f-f~)^2] <= C0 c^2 (eps^1/2 + 1/n)/n", lhs, rhs, "<=",
                          shown_rhs=float(rhs)))
    gap = abs(c - rec.round_c)
    rate = _rate_lower(c, n, e1, c0)
    checks.append(compare("|c - round(c)| <= C0 c^2 (eps^1/2 + 1/n)", gap, rate, "<=",
                          shown_rhs=float(rate)))

    xs = rec.sorted_entries
    skew = sum(x * x * (1 - x) for x in xs)
    skew_rhs = c0 * (c * c * sqrt_lower(e1) + c * c / n)
    checks.append(compare("skewness: sum x^2 (1-x) <= C0 (c^2 eps1^1/2 + c^2/n)", skew, skew_rhs, "<=",
                          shown_rhs=float(skew_rhs)))
    # literally true consequences of the ordering, no constants involved
    head = sum(x * x for x in xs[: rec.m_half])
    tail = sum(x * x for x in xs[rec.m_half:])
    tail_skew = sum(x * x * (1 - x) for x in xs[rec.m_half:])
    checks.append(compare("m_half >= sum_{k<=m} x_k^2", Fraction(rec.m_half), head, ">="))
    checks.append(compare("sum_{k>m} x_k^2 <= 2 sum_{k>m} x_k^2 (1-x_k)", tail, 2 * tail_skew, "<="))
    note = "" if hyp else "hypothesis not met; bounds reported for information"
    return CertifyReport(n, c, e1, c0, eps0, hyp, rec, note, tuple(checks))

