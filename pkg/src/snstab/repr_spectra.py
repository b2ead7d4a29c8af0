"""Partitions, irreducible characters of S_n, and spectra of normal Cayley graphs.

A partition is a plain non-increasing tuple of positive ints.  Characters use
the Murnaghan-Nakayama rule on beta-sets; eigenvalues of a normal Cayley graph
Cay(S_n, S) are ``lambda_alpha = (1/dim alpha) sum_{g in S} chi_alpha(g)``,
summed class by class.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

from .perms import derangement_count

Partition = tuple[int, ...]

GRAPH_KINDS = ("transposition", "derangement")


def validate_partition(l: Partition, n: int | None = None) -> Partition:
    l = tuple(int(x) for x in l)
    if any(x < 1 for x in l) or any(a < b for a, b in zip(l, l[1:])):
        raise ValueError(f"not a partition: {l}")
    if n is not None and sum(l) != n:
        raise ValueError(f"{l} is not a partition of {n}")
    return l


def partitions(n: int) -> list[Partition]:
    """All partitions of n in decreasing lexicographic order, (n) first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_partitions(n, n))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def dominates(l: Partition, m: Partition) -> bool:
    if sum(l) != sum(m):
        raise ValueError("partitions of different n")
    sl = sm = 0
    for k in range(max(len(l), len(m))):
        sl += l[k] if k < len(l) else 0
        sm += m[k] if k < len(m) else 0
        if sl < sm:
            return False
    return True


def conjugate(l: Partition) -> Partition:
    return tuple(sum(1 for x in l if x > k) for k in range(l[0])) if l else ()


def dimension(l: Partition) -> int:
    """Hook-length formula."""
    l = validate_partition(l)
    lc = conjugate(l)
    hooks = prod(l[i] - j + lc[j] - i - 1 for i in range(len(l)) for j in range(l[i]))
    return factorial(sum(l)) // hooks


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type mu: n! / prod k^{m_k} m_k!."""
    mu = validate_partition(mu)
    mult = Counter(mu)
    return factorial(sum(mu)) // prod(k ** m * factorial(m) for k, m in mult.items())


@lru_cache(maxsize=None)
def _mn(l: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not l else 0
    r, rest = mu[0], mu[1:]
    k = len(l)
    beta = [l[i] + k - 1 - i for i in range(k)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beta_set:
            continue
        # rim hook removal; sign counts beads strictly between t and b
        sign = -1 if sum(1 for x in beta if t < x < b) % 2 else 1
        new_beta = sorted((x if x != b else t for x in beta), reverse=True)
        new_l = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
        total += sign * _mn(tuple(x for x in new_l if x > 0), rest)
    return total


def character(l: Partition, cycle_type: Partition) -> int:
    l = validate_partition(l)
    mu = validate_partition(tuple(sorted(cycle_type, reverse=True)))
    if sum(l) != sum(mu):
        raise ValueError("partition and cycle type of different n")
    return _mn(l, mu)


def transposition_class(n: int) -> Partition:
    return (2,) + (1,) * (n - 2)


def transposition_eigenvalue(l: Partition) -> Fraction:
    """Frobenius' closed form for the transposition graph eigenvalue of l."""
    l = validate_partition(l)
    total = sum((a - j) * (a - j + 1) - j * (j - 1) for j, a in enumerate(l, start=1))
    return Fraction(total, 2)


def generating_classes(kind: str, n: int) -> list[Partition]:
    if kind == "transposition":
        return [transposition_class(n)] if n >= 2 else []
    if kind == "derangement":
        return [mu for mu in partitions(n) if 1 not in mu]
    raise ValueError(f"unsupported graph kind {kind!r}")


def graph_degree(kind: str, n: int) -> int:
    if kind == "transposition":
        return comb(n, 2)
    if kind == "derangement":
        return derangement_count(n)
    raise ValueError(f"unsupported graph kind {kind!r}")


def cayley_eigenvalue(kind: str, l: Partition) -> Fraction:
    n = sum(l)
    s = sum(class_size(mu) * character(l, mu) for mu in generating_classes(kind, n))
    return Fraction(s, dimension(l))


@dataclass(frozen=True)
class SpectrumRow:
    partition: Partition
    dimension: int
    eigenvalue: Fraction
    multiplicity: int
    laplacian: Fraction


@dataclass(frozen=True)
class SpectrumReport:
    graph_kind: str
    n: int
    degree: int
    rows: tuple[SpectrumRow, ...]
    lambda_min: Fraction
    mu2: Fraction
    mu_M: Fraction | None

    def eigenvalue(self, l: Partition) -> Fraction:
        for row in self.rows:
            if row.partition == tuple(l):
                return row.eigenvalue
        raise KeyError(l)

    def multiset(self) -> list[Fraction]:
        """All adjacency eigenvalues with multiplicity, sorted ascending."""
        return sorted(row.eigenvalue for row in self.rows for _ in range(row.multiplicity))


def cayley_spectrum(kind: str, n: int) -> SpectrumReport:
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unsupported graph kind {kind!r}")
    if n < 2:
        raise ValueError("needs n >= 2")
    d = graph_degree(kind, n)
    rows = []
    for l in partitions(n):
        lam = cayley_eigenvalue(kind, l)
        dim = dimension(l)
        rows.append(SpectrumRow(l, dim, lam, dim * dim, d - lam))
    # Laplacian values with multiplicity: mu_1 = 0 from the trivial row
    mus = sorted(mu for row in rows for mu in [row.laplacian] * row.multiplicity)
    mu2 = mus[1]
    above = [mu for mu in mus if mu > mu2]
    mu_M = above[0] if above else None
    return SpectrumReport(kind, n, d, tuple(rows), min(r.eigenvalue for r in rows), mu2, mu_M)


def second_largest_modulus_nontrivial(kind: str, n: int) -> tuple[Fraction, Fraction]:
    """Largest |lambda_alpha| over alpha not in {(n), (n-1,1)}, and that value * n^2 / degree."""
    if n < 3:
        raise ValueError("needs n >= 3")
    rep = cayley_spectrum(kind, n)
    skip = {(n,), (n - 1, 1)}
    value = max(abs(r.eigenvalue) for r in rep.rows if r.partition not in skip)
    return value, value * n * n / rep.degree


def second_smallest_eigenvalue(kind: str, n: int) -> Fraction:
    """Smallest distinct eigenvalue strictly above the minimum (lambda_K with K = max{i: lambda_i > lambda_min})."""
    rep = cayley_spectrum(kind, n)
    return min(r.eigenvalue for r in rep.rows if r.eigenvalue > rep.lambda_min)
