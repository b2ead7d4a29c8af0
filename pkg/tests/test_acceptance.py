"""Acceptance criteria, one test per clause.

Every test is tagged with ``@pytest.mark.criterion(k)``; the conftest prints a
PASS/FAIL line per criterion at the end of the run.  Three clauses state values
that disagree with exact computation; they are asserted as stated and fail
(the correct values are asserted in the module tests and in ``verify``).
"""

import subprocess
import sys
import time
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

import numpy as np
import pytest

from snstab import oracles
from snstab.bounds import derangement_input, hoffman_bound
from snstab.coset_spectral import distance_to_u1, expected_g3, moments
from snstab.families import (
    corrupted,
    counterexample_family,
    diaconis_bound,
    dictatorship,
    edge_boundary,
    family_B,
    family_C,
    isoperimetry_report,
    is_intersecting,
    random_family,
)
from snstab.optim_cubic import CubicProblem, eg3_lower_bound, solve_qprime
from snstab.perms import Coset, PermFamily, coset_members, derangement_count
from snstab.reconstruct import closed_form_F, closed_form_G, reconstruct
from snstab.repr_spectra import cayley_spectrum, dimension, partitions
from snstab.rng import stream
from snstab.verify import coset_union_families, disjoint_coset_unions, random_problem

SEED = 20240601
RANDOM_FAMILIES = 1000


@lru_cache(maxsize=None)
def criterion1_families(n: int) -> tuple[PermFamily, ...]:
    rand = [random_family(n, stream(SEED, "acceptance-1", k)) for k in range(RANDOM_FAMILIES)]
    return tuple(rand + coset_union_families(n))


# 1 ---------------------------------------------------------------------------

@pytest.mark.criterion(1)
@pytest.mark.parametrize("n", [4, 5, 6])
def test_moment_identities(n):
    start = time.perf_counter()
    fams = criterion1_families(n)
    assert len(fams) >= RANDOM_FAMILIES
    bad = []
    for A in fams:
        S = moments(A)
        m2, m3 = oracles.h_moments(A)
        if m2 * (n - 1) != S.sumsq or m3 * (n - 1) * (n - 2) / n != S.sumcube:
            bad.append(A)
    assert bad == []
    assert time.perf_counter() - start < 120


# 2 ---------------------------------------------------------------------------

@pytest.mark.criterion(2)
@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_closed_forms(n):
    start = time.perf_counter()
    for c in range(1, n):
        S = moments(dictatorship(n, c))
        assert S.sumsq == closed_form_F(n, c) == Fraction(c * (n - c), n - 1)
        assert S.sumcube == closed_form_G(n, c)
    assert time.perf_counter() - start < 60


# 3 ---------------------------------------------------------------------------

@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_disjoint_coset_unions_in_u1(n):
    assert all(distance_to_u1(A) == 0 for A in disjoint_coset_unions(n))


@pytest.mark.criterion(3)
def test_pythagoras_random():
    for k in range(1000):
        n = 4 + k % 3
        A = random_family(n, stream(SEED, "acceptance-3", k))
        lhs = Fraction(A.size, factorial(n))  # E[f^2] = E[f]
        assert lhs == oracles.f1_second_moment(A) + oracles.distance(A)


# 4 ---------------------------------------------------------------------------

@pytest.mark.criterion(4)
@pytest.mark.parametrize("kind,n", list(product(["transposition", "derangement"], [4, 5])))
def test_spectrum_matches_dense(kind, n):
    rep = cayley_spectrum(kind, n)
    assert sum(dimension(l) ** 2 for l in partitions(n)) == factorial(n)
    assert sum(r.multiplicity for r in rep.rows) == factorial(n)
    predicted = np.sort(np.array([float(v) for v in rep.multiset()]))
    numeric = np.sort(oracles.numeric_spectrum(kind, n))
    assert np.max(np.abs(predicted - numeric)) <= 1e-9


@pytest.mark.criterion(4)
@pytest.mark.parametrize("n", range(4, 10))
def test_laplacian_mu2_muM(n):
    rep = cayley_spectrum("transposition", n)
    assert (rep.mu2, rep.mu_M) == (n, 2 * n - 2)


@pytest.mark.criterion(4)
@pytest.mark.parametrize("n", range(4, 8))
def test_derangement_minimum(n):
    assert cayley_spectrum("derangement", n).lambda_min == Fraction(-derangement_count(n), n - 1)


# 5 ---------------------------------------------------------------------------

@pytest.mark.criterion(5)
@pytest.mark.parametrize("n", range(4, 8))
def test_hoffman_bound(n):
    assert hoffman_bound(derangement_input(n)) == factorial(n - 1)


@pytest.mark.criterion(5)
def test_max_independent_sets_n4():
    start = time.perf_counter()
    best = oracles.maximum_independent_sets("derangement", 4)
    assert len(best[0]) == 6
    cosets = {frozenset(coset_members(4, Coset(i, j)).ranks().tolist())
              for i in range(1, 5) for j in range(1, 5)}
    assert all(S in cosets for S in best)
    assert time.perf_counter() - start < 300


# 6 ---------------------------------------------------------------------------

@pytest.mark.criterion(6)
@pytest.mark.parametrize("n", [4, 5])
def test_diaconis_random(n):
    masks = np.stack([random_family(n, stream(SEED, "acceptance-6", n * 100_000 + k)).mask()
                      for k in range(10_000)])
    edges = oracles.boundary_batch(n, masks)
    sizes = masks.sum(axis=1)
    assert all(int(e) * factorial(n - 1) >= int(s) * (factorial(n) - int(s)) for e, s in zip(edges, sizes))


@pytest.mark.criterion(6)
def test_diaconis_all_subsets_n3():
    for bits in range(1 << 6):
        A = PermFamily.from_ranks(3, [r for r in range(6) if bits >> r & 1])
        assert edge_boundary(A) >= diaconis_bound(3, A.size)


@pytest.mark.criterion(6)
def test_counterexample_boundary_n4():
    n = 4
    assert edge_boundary(counterexample_family(n)) == 32 == 2 * n * (n - 2) * factorial(n - 2)


@pytest.mark.criterion(6)
def test_counterexample_delta_as_stated():
    # exact computation gives (n-2)/(n(n-1)) = 1/6 at n = 4
    n = 4
    assert isoperimetry_report(counterexample_family(n)).delta == Fraction(n - 2, n * n)


# 7 ---------------------------------------------------------------------------

@pytest.mark.criterion(7)
@pytest.mark.parametrize("n,c", list(product([6, 7], [1, 2, 3])))
def test_reconstruction_recovery(n, c):
    base = dictatorship(n, c)
    planted = {Coset(1, j) for j in range(1, c + 1)}
    for rho in (Fraction(0), Fraction(1, 100), Fraction(5, 100)):
        hits = 0
        for t in range(200):
            A = corrupted(base, round(rho * base.size), stream(SEED, f"acceptance-7-{n}-{c}-{rho}", t))
            rec = reconstruct(A)
            hits += set(rec.cosets) == planted
            if rho == 0:
                assert rec.symdiff == 0
        assert Fraction(hits, 200) >= Fraction(95, 100), (rho, hits)


@pytest.mark.criterion(7)
@pytest.mark.parametrize("n", [5, 6, 7])
def test_counterexample_cosets(n):
    assert set(reconstruct(counterexample_family(n)).cosets) == {Coset(1, 1), Coset(2, 2)}


@pytest.mark.criterion(7)
@pytest.mark.parametrize("n", [5, 6, 7])
def test_counterexample_symdiff_as_stated(n):
    # exact computation gives (n-2)!: A differs from T11 u T22 only in T12 n T21
    assert reconstruct(counterexample_family(n)).symdiff == 2 * factorial(n - 2)


# 8 ---------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_qprime_vs_numeric():
    for k in range(100):
        p = random_problem(stream(SEED, "acceptance-8", k))
        sol = solve_qprime(p)
        assert abs(float(sol.objective) - oracles.qprime_numeric(p)) <= 1e-9, p


@pytest.mark.criterion(8)
def test_qprime_worked_instance():
    sol = solve_qprime(CubicProblem(Fraction(1, 2), 1, 0, Fraction(1, 16)))
    assert sol.objective == Fraction(7, 32)


@pytest.mark.criterion(8)
@pytest.mark.parametrize("n", [4, 5, 6])
def test_eg3_lower_bound_sound(n):
    for A in criterion1_families(n):
        S = moments(A)
        assert eg3_lower_bound(n, S.c, S.eps1, require_hypothesis=False) <= expected_g3(S)


# 9 ---------------------------------------------------------------------------

@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", range(4, 9))
def test_family_B_size(n):
    assert family_B(n).size == 3 * factorial(n - 2) - 2 * factorial(n - 3)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", range(4, 9))
def test_family_C_size_as_stated(n):
    # exact count is one larger: C also contains the transposition (1 2)
    d = derangement_count
    assert family_C(n).size == factorial(n - 1) - d(n - 1) - d(n - 2)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", range(4, 8))
def test_zoo_intersecting(n):
    assert is_intersecting(family_B(n)) and is_intersecting(family_C(n))


@pytest.mark.criterion(9)
@pytest.mark.parametrize("n", range(4, 10))
def test_zoo_size_order(n):
    b, c = family_B(n).size, family_C(n).size
    if n <= 5:
        assert b == c
    else:
        assert b < c


# 10 --------------------------------------------------------------------------

@pytest.mark.criterion(10)
def test_verify_all_end_to_end():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "snstab", "verify", "all", "--format", "table"],
                          capture_output=True, text=True, timeout=900)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert "[FAIL]" not in proc.stdout
    assert elapsed < 15 * 60
