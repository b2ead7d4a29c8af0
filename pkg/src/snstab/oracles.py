"""Brute-force reference computations used by the test suite and `verify`.

Everything here sums over all of S_n (or builds dense matrices) and shares no
code path with the closed-form routines it is compared against.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import networkx as nx
import numpy as np
from scipy.optimize import minimize_scalar

from .coset_spectral import coset_counts
from .optim_cubic import CubicProblem
from .perms import PermFamily, all_perms, rank_many, transposition_neighbours


def _g_scaled(A: PermFamily) -> np.ndarray:
    """g(sigma) * (n-1)! for every sigma, as Python ints (object array)."""
    n = A.n
    counts = coset_counts(A)
    P = all_perms(n).astype(np.int64) - 1
    G = counts[np.arange(n)[None, :], P].sum(axis=1)
    return G.astype(object)


def h_moments(A: PermFamily) -> tuple[Fraction, Fraction]:
    """(E[h^2], E[h^3]) by summing h(sigma) = sum_i b_{i, sigma(i)} over S_n."""
    n = A.n
    H = _g_scaled(A) - A.size
    fm1, N = factorial(n - 1), factorial(n)
    return Fraction(int((H ** 2).sum()), N * fm1 ** 2), Fraction(int((H ** 3).sum()), N * fm1 ** 3)


def g_moments(A: PermFamily) -> tuple[Fraction, Fraction]:
    n = A.n
    G = _g_scaled(A)
    fm1, N = factorial(n - 1), factorial(n)
    return Fraction(int((G ** 2).sum()), N * fm1 ** 2), Fraction(int((G ** 3).sum()), N * fm1 ** 3)


def _f1_scaled(A: PermFamily) -> np.ndarray:
    # f_1 * n! = (n-1) g (n-1)! - (n-2) |A|
    return (A.n - 1) * _g_scaled(A) - (A.n - 2) * A.size


def f1_mean(A: PermFamily) -> Fraction:
    N = factorial(A.n)
    return Fraction(int(_f1_scaled(A).sum()), N * N)


def f1_second_moment(A: PermFamily) -> Fraction:
    N = factorial(A.n)
    return Fraction(int((_f1_scaled(A) ** 2).sum()), N ** 3)


def distance(A: PermFamily) -> Fraction:
    """sum_sigma (f - f_1)^2 / n!."""
    N = factorial(A.n)
    diff = A.mask().astype(np.int64).astype(object) * N - _f1_scaled(A)
    return Fraction(int((diff ** 2).sum()), N ** 3)


def residual_orthogonal(A: PermFamily) -> bool:
    """f - f_1 is orthogonal to every 1-coset indicator (exact)."""
    n = A.n
    N = factorial(n)
    diff = A.mask().astype(np.int64).astype(object) * N - _f1_scaled(A)
    P = all_perms(n)
    for i in range(n):
        for j in range(1, n + 1):
            if diff[P[:, i] == j].sum() != 0:
                return False
    return True


def sign_component_sq(A: PermFamily) -> Fraction:
    """||P_sign 1_A||^2 = E[1_A sgn]^2 (the U_(1^n) component)."""
    P = all_perms(A.n).astype(np.int64)
    upper = np.triu(np.ones((A.n, A.n), dtype=bool), 1)
    inv = ((P[:, :, None] > P[:, None, :]) & upper).sum(axis=(1, 2))
    sgn = np.where(inv % 2 == 0, 1, -1)
    return Fraction(int(sgn[A.mask()].sum()), factorial(A.n)) ** 2


def lstsq_projection_distance(A: PermFamily) -> float:
    """Float least-squares projection of 1_A onto span{1_T_ij}; returns E[(f - Pf)^2]."""
    n = A.n
    P = all_perms(n)
    X = np.stack([(P[:, i] == j) for i in range(n) for j in range(1, n + 1)], axis=1).astype(float)
    f = A.mask().astype(float)
    coef, *_ = np.linalg.lstsq(X, f, rcond=None)
    r = f - X @ coef
    return float(r @ r / len(f))


# graphs -----------------------------------------------------------------------

def adjacency(kind: str, n: int) -> np.ndarray:
    P = all_perms(n).astype(np.int64)
    N = P.shape[0]
    Adj = np.zeros((N, N), dtype=np.int8)
    if kind == "transposition":
        for row in transposition_neighbours(n):
            Adj[np.arange(N), row] = 1
    elif kind == "derangement":
        ident = np.arange(1, n + 1)
        gens = P[(P != ident).all(axis=1)] - 1
        for d in gens:
            Adj[np.arange(N), rank_many(P[:, d])] = 1
    else:
        raise ValueError(kind)
    return Adj


def numeric_spectrum(kind: str, n: int) -> np.ndarray:
    return np.linalg.eigvalsh(adjacency(kind, n).astype(float))


def maximum_independent_sets(kind: str, n: int) -> list[frozenset[int]]:
    """All maximum independent sets (as rank sets), via cliques of the complement graph."""
    Adj = adjacency(kind, n)
    comp = nx.from_numpy_array((1 - Adj) - np.eye(Adj.shape[0], dtype=np.int8))
    cliques = [frozenset(c) for c in nx.find_cliques(comp)]
    best = max(len(c) for c in cliques)
    return sorted((c for c in cliques if len(c) == best), key=sorted)


def boundary_batch(n: int, masks: np.ndarray) -> np.ndarray:
    """Transposition-graph edge boundaries of many families at once; masks is (k, n!) bool."""
    masks = np.asarray(masks, dtype=bool)
    out = np.zeros(masks.shape[0], dtype=np.int64)
    for row in transposition_neighbours(n):
        out += (masks & ~masks[:, row]).sum(axis=1)
    return out


def laplacian_quadratic_form(A: PermFamily) -> Fraction:
    """<1_A, L 1_A> with the normalized inner product: (d|A| - 1_A^T Adj 1_A) / n!."""
    m = A.mask()
    nb = transposition_neighbours(A.n)
    internal = sum(int((m & m[row]).sum()) for row in nb)
    return Fraction(len(nb) * A.size - internal, factorial(A.n))


# numeric optimum of the two-level problem --------------------------------------

def qprime_numeric(p: CubicProblem) -> float:
    """min theta r^3 + (1-theta) s^3 over r, s >= 0 with the mean fixed and the L2 budget,
    by bounded scalar minimization in r plus the interval endpoints."""
    t, H, L, eta = (float(x) for x in (p.theta, p.H, p.L, p.eta))
    mean = t * H + (1 - t) * L

    def s_of(r):
        return (mean - t * r) / (1 - t)

    def obj(r):
        return t * r ** 3 + (1 - t) * s_of(r) ** 3

    # theta (r-H)^2 + (1-theta)(s-L)^2 = theta (r-H)^2 / (1-theta)
    radius = np.sqrt(eta * (1 - t) / t)
    lo = max(H - radius, 0.0)
    hi = min(H + radius, mean / t)  # s >= 0
    res = minimize_scalar(obj, bounds=(lo, hi), method="bounded", options={"xatol": 1e-13})
    return float(min(res.fun, obj(lo), obj(hi)))
