from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from snstab.interval import Interval, exact_sqrt, sqrt_bounds, sqrt_lower, sqrt_upper

from strategies import nonneg_rationals, rationals


@given(nonneg_rationals)
def test_sqrt_bounds_enclose(x):
    lo, hi = sqrt_bounds(x)
    assert lo * lo <= x <= hi * hi
    assert hi - lo <= Fraction(1, 2 ** 96)
    assert sqrt_lower(x) == lo and sqrt_upper(x) == hi


@given(st.fractions(min_value=0, max_value=1000, max_denominator=1000))
def test_exact_sqrt_of_square(r):
    assert exact_sqrt(r * r) == r
    assert sqrt_bounds(r * r) == (r, r)


def test_exact_sqrt_none():
    assert exact_sqrt(Fraction(2)) is None
    with pytest.raises(ValueError):
        exact_sqrt(Fraction(-1))


@given(rationals, rationals, rationals, rationals)
def test_interval_arithmetic_encloses(a, b, x, y):
    I = Interval(min(a, b), max(a, b))
    J = Interval(min(x, y), max(x, y))
    for p in (a, b):
        for q in (x, y):
            assert p + q in I + J
            assert p - q in I - J
            assert p * q in I * J
            if 0 not in J:
                assert p / q in I / J


@given(rationals, st.integers(0, 4))
def test_interval_power(a, k):
    assert a ** k in Interval(a) ** k


def test_interval_sqrt():
    I = Interval(Fraction(2), Fraction(3)).sqrt()
    assert I.lo ** 2 <= 2 and I.hi ** 2 >= 3
    assert 1.41 < float(Interval(2).sqrt()) < 1.42
