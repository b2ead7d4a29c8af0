from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from snstab.coset_spectral import moments
from snstab.families import coset_union, corrupted, counterexample_family, dictatorship
from snstab.perms import Coset, PermFamily
from snstab.reconstruct import (
    ReconstructionError,
    certify,
    closed_form_F,
    closed_form_G,
    members_covered,
    reconstruct,
    round_half_up,
    symmetric_difference,
    union_size,
)
from snstab.rng import stream

from strategies import families

COSETS_4 = [Coset(i, j) for i in range(1, 5) for j in range(1, 5)]


@given(st.lists(st.sampled_from(COSETS_4), max_size=4))
def test_union_size_inclusion_exclusion(cosets):
    assert union_size(4, cosets) == coset_union(4, cosets).size


@given(families(n=4), st.lists(st.sampled_from(COSETS_4), max_size=3))
def test_symmetric_difference_brute(A, cosets):
    C = coset_union(4, cosets)
    assert symmetric_difference(A, cosets) == (A ^ C).size
    assert members_covered(A, cosets) == (A & C).size


def test_round_half_up():
    assert [round_half_up(Fraction(k, 2)) for k in range(5)] == [0, 1, 1, 2, 2]


@pytest.mark.parametrize("n", range(3, 8))
def test_closed_forms_match_dictatorships(n):
    for c in range(1, n):
        for by in ("image", "preimage"):
            S = moments(dictatorship(n, c, by=by))
            assert S.sumsq == closed_form_F(n, c)
            assert S.sumcube == closed_form_G(n, c)


@pytest.mark.parametrize("n,c", [(5, 1), (5, 2), (6, 3), (7, 2)])
def test_exact_dictatorship_recovered(n, c):
    rec = reconstruct(dictatorship(n, c))
    assert rec.cosets == tuple(Coset(1, j) for j in range(1, c + 1))
    assert rec.symdiff == 0 and rec.bound_ok and rec.m_half == c


def test_preimage_dictatorship_recovered():
    rec = reconstruct(dictatorship(6, 2, point=3, by="preimage"))
    assert set(rec.cosets) == {Coset(1, 3), Coset(2, 3)}


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_counterexample_symdiff(n):
    rec = reconstruct(counterexample_family(n))
    assert rec.cosets == (Coset(1, 1), Coset(2, 2))
    assert rec.symdiff == factorial(n - 2)


def test_three_swaps_n5():
    A = corrupted(dictatorship(5, 1), 3, stream(0, "t"))
    rec = reconstruct(A)
    assert rec.cosets == (Coset(1, 1),) and rec.symdiff == 6


def test_reconstruct_rejections():
    with pytest.raises(ReconstructionError):
        reconstruct(PermFamily.empty(5))
    with pytest.raises(ReconstructionError):
        reconstruct(dictatorship(5, 3))  # c > n/2
    with pytest.raises(ReconstructionError):
        reconstruct(PermFamily.from_ranks(5, [0]))  # round(c) = 0
    with pytest.raises(ReconstructionError):
        reconstruct(PermFamily.full(2))


def test_ties_broken_by_index():
    n = 4
    # T11 and T22 and T12 n T21: b entries tie between (1,1) and (2,2)
    rec = reconstruct(counterexample_family(n))
    assert [(T.i, T.j) for T in rec.cosets] == sorted((T.i, T.j) for T in rec.cosets)


def test_certify_checks():
    rep = certify(dictatorship(6, 2))
    assert rep.hypothesis_ok and rep.eps1 == 0
    assert all(ch.passed for ch in rep.checks)
    names = [ch.name for ch in rep.checks]
    assert any("expbound" in s for s in names) and any("skewness" in s for s in names)


def test_certify_small_constant_reports_violation():
    A = corrupted(dictatorship(6, 2), 20, stream(1, "t"))
    rep = certify(A, c0=Fraction(1, 10 ** 6))
    assert not all(ch.passed for ch in rep.checks)


def test_certify_records_rejection():
    rep = certify(PermFamily.empty(5))
    assert rep.reconstruction is None and not rep.hypothesis_ok and rep.note


@given(families(n=5))
def test_reconstruct_returns_round_c_cosets(A):
    S = moments(A)
    if S.c == 0 or S.c > Fraction(5, 2) or round_half_up(S.c) == 0:
        return
    rec = reconstruct(A)
    assert len(rec.cosets) == rec.round_c == round_half_up(S.c)
    assert len(set(rec.cosets)) == rec.round_c
    best = min(symmetric_difference(A, list(cs)) for cs in combinations(
        [Coset(i, j) for i in range(1, 6) for j in range(1, 6)], rec.round_c))
    assert rec.symdiff >= best
