from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from snstab import oracles
from snstab.perms import all_perms, derangement_count, Permutation
from snstab.repr_spectra import (
    cayley_eigenvalue,
    cayley_spectrum,
    character,
    class_size,
    conjugate,
    dimension,
    dominates,
    graph_degree,
    partitions,
    second_largest_modulus_nontrivial,
    second_smallest_eigenvalue,
    transposition_eigenvalue,
    validate_partition,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(1, 11))
def test_partition_counts(n):
    ps = partitions(n)
    assert len(ps) == PARTITION_COUNTS[n]
    assert ps == sorted(ps, reverse=True)
    assert sum(dimension(l) ** 2 for l in ps) == factorial(n)
    assert sum(class_size(m) for m in ps) == factorial(n)


@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugate_involution(l):
    assert conjugate(conjugate(l)) == l
    assert dimension(conjugate(l)) == dimension(l)


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.sampled_from(partitions(n)), st.sampled_from(partitions(n)))))
def test_dominance_reverses_under_conjugation(pair):
    l, m = pair
    assert dominates(l, m) == dominates(conjugate(m), conjugate(l))
    assert dominates(l, l)


def test_dominates_requires_same_n():
    with pytest.raises(ValueError):
        dominates((2,), (1, 1, 1))


def test_validate_partition():
    with pytest.raises(ValueError):
        validate_partition((1, 2))
    with pytest.raises(ValueError):
        validate_partition((2, 1), 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_character_orthogonality(n):
    ps = partitions(n)
    N = factorial(n)
    for l in ps:
        assert character(l, (1,) * n) == dimension(l)
        for m in ps:
            inner = sum(class_size(mu) * character(l, mu) * character(m, mu) for mu in ps)
            assert inner == (N if l == m else 0)


def test_character_against_permutation_rep():
    # chi_(n) + chi_(n-1,1) counts fixed points
    n = 5
    for mu in partitions(n):
        fixed = mu.count(1)
        assert character((n,), mu) + character((n - 1, 1), mu) == fixed
        assert character((1,) * n, mu) == (-1) ** (n - len(mu))


@pytest.mark.parametrize("n", range(2, 10))
def test_frobenius_transposition_formula(n):
    t = (2,) + (1,) * (n - 2)
    for l in partitions(n):
        assert transposition_eigenvalue(l) == Fraction(comb(n, 2) * character(l, t), dimension(l))
        assert cayley_eigenvalue("transposition", l) == transposition_eigenvalue(l)


@pytest.mark.parametrize("kind", ["transposition", "derangement"])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_spectrum_against_dense(kind, n):
    rep = cayley_spectrum(kind, n)
    exact = np.array([float(x) for x in rep.multiset()])
    assert np.allclose(exact, np.sort(oracles.numeric_spectrum(kind, n)), atol=1e-9)
    assert rep.degree == graph_degree(kind, n)


@pytest.mark.parametrize("n", range(2, 9))
def test_degrees(n):
    assert graph_degree("transposition", n) == comb(n, 2)
    assert graph_degree("derangement", n) == derangement_count(n)


@pytest.mark.parametrize("n", range(4, 10))
def test_transposition_laplacian(n):
    rep = cayley_spectrum("transposition", n)
    assert rep.mu2 == n and rep.mu_M == 2 * n - 2
    assert rep.eigenvalue((n - 1, 1)) == comb(n, 2) - n


@pytest.mark.parametrize("n", range(3, 9))
def test_derangement_lambda_min(n):
    rep = cayley_spectrum("derangement", n)
    assert rep.lambda_min == Fraction(-derangement_count(n), n - 1)
    assert rep.eigenvalue((n - 1, 1)) == rep.lambda_min


@pytest.mark.parametrize("n", range(5, 10))
def test_derangement_lambda_K_small(n):
    value, ratio = second_largest_modulus_nontrivial("derangement", n)
    assert value < Fraction(derangement_count(n), n - 1)
    assert ratio == value * n * n / derangement_count(n)


def test_transposition_n3_is_complete_bipartite():
    rep = cayley_spectrum("transposition", 3)
    assert rep.multiset() == [-3, 0, 0, 0, 0, 3]
    assert (rep.mu2, rep.mu_M) == (3, 6)


def test_derangement_n4_tie():
    # at n = 4 the sign representation ties with the standard one at lambda_min
    rep = cayley_spectrum("derangement", 4)
    assert rep.eigenvalue((1, 1, 1, 1)) == rep.lambda_min == -3
    assert second_largest_modulus_nontrivial("derangement", 4)[0] == 3
    assert second_smallest_eigenvalue("derangement", 4) > -3


def test_eigenvalue_is_class_sum():
    # adjacency eigenvalue on U_l via explicit sum over the generating set
    n = 4
    P = all_perms(n)
    gens = [Permutation(tuple(p)) for p in P if all(p[i] != i + 1 for i in range(n))]
    for l in partitions(n):
        s = sum(character(l, g.cycle_type()) for g in gens)
        assert cayley_eigenvalue("derangement", l) == Fraction(s, dimension(l))


def test_bad_kind():
    with pytest.raises(ValueError):
        cayley_spectrum("cycle", 4)
