"""Intersecting families, the canonical example families, and edge boundaries in
the transposition graph (the Cayley graph of S_n generated by transpositions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .perms import (
    Coset,
    PermFamily,
    Permutation,
    all_perms,
    check_cap,
    derangement_count,
    rank_many,
    transposition_neighbours,
)
from .coset_spectral import coset_counts
from .reconstruct import Reconstruction, ReconstructionError, members_covered, reconstruct

_CHUNK_CELLS = 1 << 24


# predicates -----------------------------------------------------------------

def is_intersecting(A: PermFamily) -> bool:
    """True iff every two members agree on some point."""
    if A.size < 2:
        return True
    M = A.members()
    step = max(1, _CHUNK_CELLS // (M.shape[0] * A.n))
    for start in range(0, M.shape[0], step):
        block = M[start:start + step]
        # (b, k): does block row disagree with member everywhere?
        disagree = (block[:, None, :] != M[None, :, :]).all(axis=2)
        if disagree.any():
            return False
    return True


def is_centred(A: PermFamily) -> Coset | None:
    """The first T_ij (ascending) containing A, or None."""
    if A.size == 0:
        return Coset(1, 1)
    counts = coset_counts(A)
    hits = np.argwhere(counts == A.size)
    if hits.size == 0:
        return None
    i, j = hits[0]
    return Coset(int(i) + 1, int(j) + 1)


def dictatorship_witness(A: PermFamily) -> tuple[str, int, tuple[int, ...]] | None:
    """If A is a disjoint union of 1-cosets, return ``("image", i, js)`` (A = union of T_ij over js)
    or ``("preimage", j, is)``; else None."""
    if A.n < 2:
        return ("image", 1, (1,)) if A.size else ("image", 1, ())
    counts = coset_counts(A)
    full = factorial(A.n - 1)
    for i in range(A.n):
        row = counts[i]
        if np.all((row == 0) | (row == full)):
            return "image", i + 1, tuple(int(j) + 1 for j in np.flatnonzero(row == full))
    for j in range(A.n):
        col = counts[:, j]
        if np.all((col == 0) | (col == full)):
            return "preimage", j + 1, tuple(int(i) + 1 for i in np.flatnonzero(col == full))
    return None


# generators -----------------------------------------------------------------

def coset_union(n: int, cosets) -> PermFamily:
    P = all_perms(n)
    mask = np.zeros(P.shape[0], dtype=bool)
    for T in cosets:
        T.validate(n)
        mask |= P[:, T.i - 1] == T.j
    return PermFamily.from_mask(n, mask)


def dictatorship(n: int, c: int, point: int = 1, by: str = "image") -> PermFamily:
    """``by="image"``: T_{point,1} u ... u T_{point,c}; ``by="preimage"``: T_{1,point} u ... u T_{c,point}."""
    if not 0 <= c <= n:
        raise ValueError("need 0 <= c <= n")
    if by == "image":
        cosets = [Coset(point, j) for j in range(1, c + 1)]
    elif by == "preimage":
        cosets = [Coset(i, point) for i in range(1, c + 1)]
    else:
        raise ValueError(f"unknown dictatorship kind {by!r}")
    return coset_union(n, cosets)


def family_B(n: int) -> PermFamily:
    """Permutations fixing at least two of the points 1, 2, 3."""
    if n < 3:
        raise ValueError("family_B needs n >= 3")
    P = all_perms(n)
    fixed = (P[:, :3] == np.array([1, 2, 3], dtype=P.dtype)).sum(axis=1)
    return PermFamily.from_mask(n, fixed >= 2)


def family_C(n: int) -> PermFamily:
    """{sigma : sigma(1) = 1 and sigma agrees with (1 2) somewhere} together with (1 2)."""
    if n < 3:
        raise ValueError("family_C needs n >= 3")
    P = all_perms(n)
    tau = np.array(Permutation.transposition(n, 1, 2).images, dtype=P.dtype)
    mask = (P[:, 0] == 1) & (P == tau).any(axis=1)
    mask |= (P == tau).all(axis=1)
    return PermFamily.from_mask(n, mask)


def counterexample_family(n: int) -> PermFamily:
    """T_11 u T_22 u (T_12 n T_21): boundary close to minimal, far from every dictatorship."""
    if n < 3:
        raise ValueError("needs n >= 3")
    P = all_perms(n)
    mask = (P[:, 0] == 1) | (P[:, 1] == 2) | ((P[:, 0] == 2) & (P[:, 1] == 1))
    return PermFamily.from_mask(n, mask)


def sharpness_family(n: int, c: int, k: int) -> PermFamily:
    """T_{1,1..c} u (T_{1,c+1} n W) minus (T_{1,c} n W), with W = T_{2,n} u ... u T_{2,n-k+1}.

    Has size c (n-1)! and boundary excess of order k/n.
    """
    if not (1 <= c and 1 <= k and c + k < n):
        raise ValueError("need c, k >= 1 and c + k < n")
    P = all_perms(n)
    first, second = P[:, 0], P[:, 1]
    W = second >= n - k + 1
    mask = ((first <= c) | ((first == c + 1) & W)) & ~((first == c) & W)
    return PermFamily.from_mask(n, mask)


def lex_initial_segment(n: int, k: int) -> PermFamily:
    total = factorial(n)
    if not 0 <= k <= total:
        raise ValueError(f"need 0 <= k <= {total}")
    mask = np.zeros(total, dtype=bool)
    mask[:k] = True
    return PermFamily.from_mask(n, mask)


def random_family(n: int, rng: np.random.Generator, density: float | None = None) -> PermFamily:
    """Bernoulli(density) subset of S_n; density itself uniform on (0, 1/2] if omitted."""
    if density is None:
        density = 0.5 * (1.0 - rng.random())
    return PermFamily.from_mask(n, rng.random(factorial(n)) < density)


def corrupted(A: PermFamily, swaps: int, rng: np.random.Generator) -> PermFamily:
    """Swap ``swaps`` uniformly chosen members of A for uniformly chosen outsiders."""
    mask = A.mask().copy()
    inside, outside = np.flatnonzero(mask), np.flatnonzero(~mask)
    if swaps > min(inside.size, outside.size):
        raise ValueError("too many swaps")
    mask[rng.choice(inside, swaps, replace=False)] = False
    mask[rng.choice(outside, swaps, replace=False)] = True
    return PermFamily.from_mask(A.n, mask)


def cyclic_coset_partition(n: int) -> list[PermFamily]:
    """The left cosets sigma<rho> of the cyclic group generated by rho = (1 2 ... n).

    Two distinct members of one coset disagree everywhere, so an intersecting
    family meets each coset at most once.
    """
    P = all_perms(n).astype(np.int64)
    rho = np.roll(np.arange(n), -1)  # 0-based images of (1 2 ... n)
    powers = [np.arange(n)]
    for _ in range(n - 1):
        powers.append(rho[powers[-1]])
    label = np.full(P.shape[0], -1, dtype=np.int64)
    blocks = []
    for r in range(P.shape[0]):
        if label[r] >= 0:
            continue
        # sigma * rho^k in one-line notation: column permutation of sigma
        ranks = rank_many(np.stack([P[r, p] for p in powers]))
        label[ranks] = len(blocks)
        blocks.append(PermFamily.from_ranks(n, ranks))
    return blocks


# boundaries -----------------------------------------------------------------

def edge_boundary(A: PermFamily, cap: int | None = None) -> int:
    """Number of transposition-graph edges {sigma, sigma tau} with exactly one end in A."""
    if A.n < 2:
        return 0
    check_cap(A.n, cap)
    m = A.mask()
    nb = transposition_neighbours(A.n)
    return int(sum(int((m & ~m[row]).sum()) for row in nb))


def diaconis_bound(n: int, size: int) -> Fraction:
    """|A| (n! - |A|) / (n-1)!."""
    return Fraction(size * (factorial(n) - size), factorial(n - 1))


@dataclass(frozen=True)
class BoundaryReport:
    n: int
    family_size: int
    boundary_edges: int
    dm_bound: Fraction
    delta: Fraction
    theorem_path: bool
    c: Fraction
    reconstruction: Reconstruction | None
    a_minus_b: int | None
    rough_rhs: Fraction | None
    rough_ok: bool | None
    note: str


def isoperimetry_report(A: PermFamily, c0=100, cap: int | None = None) -> BoundaryReport:
    """Boundary excess delta (|dA| = bound + delta n |A|), and the cosets recovered from A.

    ``rough_rhs`` is C0 (c delta (n-1)! + c^2 (n-2)!), compared against |A \\ B|.
    """
    n = A.n
    if n < 3:
        raise ValueError("needs n >= 3")
    e = edge_boundary(A, cap)
    dm = diaconis_bound(n, A.size)
    delta = (e - dm) / (n * A.size) if A.size else Fraction(0)
    c = Fraction(A.size, factorial(n - 1))
    theorem_path = A.size > 0 and c.denominator == 1
    notes = [] if theorem_path else ["|A| is not a positive multiple of (n-1)!: report only"]
    rec = a_minus_b = rhs = ok = None
    try:
        rec = reconstruct(A, c0)
    except ReconstructionError as exc:
        notes.append(str(exc))
    if rec is not None:
        a_minus_b = A.size - members_covered(A, rec.cosets)
        rhs = Fraction(c0) * (c * delta * factorial(n - 1) + c * c * factorial(n - 2))
        ok = a_minus_b <= rhs if theorem_path else None
    return BoundaryReport(n, A.size, e, dm, delta, theorem_path, c, rec, a_minus_b, rhs, ok, "; ".join(notes))


# intersecting-family checks ---------------------------------------------------

@dataclass(frozen=True)
class CameronKuReport:
    n: int
    size: int
    centred: Coset | None
    best: Coset
    missing: int
    obstruction: int
    obstruction_ok: bool
    agreeing_count: int | None
    agreeing_formula: int


def cameron_ku_check(A: PermFamily) -> CameronKuReport:
    """For an intersecting A: is it centred, and if not, does the best T_ij miss
    at least d_{n-1} + d_{n-2} of its members?

    If tau in A has tau(i) != j, every member of A n T_ij agrees with tau somewhere,
    and exactly (n-1)! - d_{n-1} - d_{n-2} members of T_ij do.
    """
    n = A.n
    if n < 3:
        raise ValueError("needs n >= 3")
    if not is_intersecting(A):
        raise ValueError("family is not intersecting")
    counts = coset_counts(A)
    i, j = np.unravel_index(int(np.argmax(counts)), counts.shape)
    best = Coset(int(i) + 1, int(j) + 1)
    full = factorial(n - 1)
    missing = full - int(counts[i, j])
    obstruction = derangement_count(n - 1) + derangement_count(n - 2)
    centred = is_centred(A)
    formula = full - obstruction
    agreeing = None
    M = A.members()
    outsiders = M[M[:, best.i - 1] != best.j] if A.size else M[:0]
    if outsiders.shape[0]:
        P = all_perms(n)
        in_T = P[P[:, best.i - 1] == best.j]
        agreeing = int((in_T == outsiders[0]).any(axis=1).sum())
    ok = centred is not None or missing >= obstruction
    return CameronKuReport(n, A.size, centred, best, missing, obstruction, ok, agreeing, formula)


@dataclass(frozen=True)
class LexProbe:
    n: int
    k: int
    lex_boundary: int
    best_other: int
    trials: int
    counterexample: tuple[int, ...] | None


def benefraim_probe(n: int, k: int, rng: np.random.Generator, trials: int = 50, steps: int = 200) -> LexProbe:
    """Compare the lex initial segment of size k with randomized local-search families of size k.

    Records the ranks of any family with strictly smaller boundary.
    """
    check_cap(n)
    lex = lex_initial_segment(n, k)
    lex_e = edge_boundary(lex)
    total = factorial(n)
    nb = transposition_neighbours(n)
    best, witness = None, None
    for _ in range(trials):
        mask = np.zeros(total, dtype=bool)
        mask[rng.choice(total, k, replace=False)] = True
        e = _boundary_of_mask(mask, nb)
        for _ in range(steps):
            if k in (0, total):
                break
            inside, outside = np.flatnonzero(mask), np.flatnonzero(~mask)
            a, b = rng.choice(inside), rng.choice(outside)
            mask[a], mask[b] = False, True
            e2 = _boundary_of_mask(mask, nb)
            if e2 <= e:
                e = e2
            else:
                mask[a], mask[b] = True, False
        if best is None or e < best:
            best = e
        if e < lex_e and witness is None:
            witness = tuple(int(r) for r in np.flatnonzero(mask))
    return LexProbe(n, k, lex_e, best if best is not None else lex_e, trials, witness)


def _boundary_of_mask(mask: np.ndarray, nb: np.ndarray) -> int:
    return int(sum(int((mask & ~mask[row]).sum()) for row in nb))
