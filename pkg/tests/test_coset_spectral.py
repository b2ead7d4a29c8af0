from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from snstab import oracles
from snstab.coset_spectral import (
    coset_matrix,
    distance_to_u1,
    eps1,
    expected_f1_squared,
    expected_g2,
    expected_g3,
    expected_h2,
    f_g_h_values,
    moments,
    project_u1,
)
from snstab.families import dictatorship
from snstab.perms import PermFamily, unrank

from strategies import families


@given(families())
def test_b_rows_and_columns_sum_to_zero(A):
    cm = coset_matrix(A)
    assert all(sum(row) == 0 for row in cm.b)
    assert all(sum(col) == 0 for col in zip(*cm.b))


@given(families())
def test_a_is_c_bistochastic(A):
    cm = coset_matrix(A)
    assert all(sum(row) == cm.c for row in cm.a)
    assert all(0 <= x <= 1 for row in cm.a for x in row)


@given(families(n_max=4))
def test_h2_h3_against_brute_force(A):
    S = moments(A)
    m2, m3 = oracles.h_moments(A)
    assert (S.m2, S.m3) == (m2, m3)


@given(families(n_max=4))
def test_pythagoras(A):
    f2 = Fraction(A.size, factorial(A.n))
    assert f2 == expected_f1_squared(A) + distance_to_u1(A)
    assert expected_f1_squared(A) == oracles.f1_second_moment(A)
    assert distance_to_u1(A) == oracles.distance(A)


@given(families(n_max=4))
def test_g_moments_closed_forms(A):
    S = moments(A)
    g2, g3 = oracles.g_moments(A)
    assert g2 == expected_g2(A.n, S.c, S.eps1)
    assert g3 == expected_g3(S)
    assert S.m2 == expected_h2(A.n, S.c, S.eps1)


@given(families())
def test_eps1_range(A):
    e = eps1(A)
    assert 0 <= e <= 1


def test_f_g_h_pointwise():
    A = dictatorship(4, 2)
    for r in range(24):
        p = unrank(4, r)
        f1, g, h = f_g_h_values(A, p)
        assert f1 == (1 if p in A else 0)
        assert g == (Fraction(4, 3) * f1 + Fraction(2, 3) * 2)
        assert h == g - 2
        assert project_u1(A, p) == f1


def test_dictatorship_is_in_u1():
    for c in range(5):
        assert distance_to_u1(dictatorship(5, c)) == 0


def test_empty_and_full():
    for A in (PermFamily.empty(4), PermFamily.full(4)):
        S = moments(A)
        assert S.sumsq == 0 and S.eps1 == 0


def test_residual_orthogonal_to_cosets():
    A = PermFamily.from_ranks(4, [0, 5, 7, 13, 22])
    assert oracles.residual_orthogonal(A)
    assert oracles.lstsq_projection_distance(A) == pytest.approx(float(distance_to_u1(A)), abs=1e-12)


def test_small_n_errors():
    with pytest.raises(ValueError):
        moments(PermFamily.full(2))
    with pytest.raises(ValueError):
        coset_matrix(PermFamily.full(1))
    with pytest.raises(ValueError):
        f_g_h_values(PermFamily.full(3), unrank(4, 0))
