from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest

from snstab import oracles
from snstab.families import dictatorship
from snstab.optim_cubic import CubicProblem
from snstab.perms import PermFamily, derangement_count


@pytest.mark.parametrize("kind,n,deg", [("transposition", 4, comb(4, 2)), ("derangement", 4, derangement_count(4))])
def test_adjacency_regular_symmetric(kind, n, deg):
    A = oracles.adjacency(kind, n)
    assert (A == A.T).all() and (np.diag(A) == 0).all()
    assert (A.sum(axis=1) == deg).all()


def test_adjacency_bad_kind():
    with pytest.raises(ValueError):
        oracles.adjacency("cycle", 3)


def test_maximum_independent_sets_n3():
    best = oracles.maximum_independent_sets("derangement", 3)
    assert len(best) == 9 and all(len(s) == 2 for s in best)


def test_sign_component():
    assert oracles.sign_component_sq(PermFamily.full(4)) == 0
    assert oracles.sign_component_sq(PermFamily.from_ranks(3, [0])) == Fraction(1, 36)


def test_moment_oracles_on_dictatorship():
    A = dictatorship(5, 2)
    assert oracles.distance(A) == 0
    assert oracles.f1_mean(A) == Fraction(2, 5)
    assert oracles.f1_second_moment(A) == Fraction(A.size, factorial(5))


def test_qprime_numeric_worked():
    p = CubicProblem(Fraction(1, 2), 1, 0, Fraction(1, 16))
    assert oracles.qprime_numeric(p) == pytest.approx(7 / 32, abs=1e-12)
