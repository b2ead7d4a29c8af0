"""Permutations of S_n in one-line notation, lexicographic ranking, 1-cosets
and dense permutation families.

Points are 1-based throughout: ``Permutation((2, 1, 3))`` maps 1->2, 2->1, 3->3.
Ranks index S_n in lexicographic order of the one-line notation.
"""

from __future__ import annotations

import os
import re
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

STORAGE_CAP = 12
DEFAULT_EXHAUSTIVE_CAP = 8


class CapExceeded(ValueError):
    """Raised when an operation would enumerate or store more of S_n than allowed."""


class FamilyFormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def exhaustive_cap() -> int:
    return int(os.environ.get("SNSTAB_CAP", DEFAULT_EXHAUSTIVE_CAP))


@contextmanager
def cap_override(cap: int | None):
    """Temporarily set SNSTAB_CAP (None leaves it alone)."""
    if cap is None:
        yield
        return
    old = os.environ.get("SNSTAB_CAP")
    os.environ["SNSTAB_CAP"] = str(cap)
    try:
        yield
    finally:
        if old is None:
            del os.environ["SNSTAB_CAP"]
        else:
            os.environ["SNSTAB_CAP"] = old


def check_cap(n: int, cap: int | None = None) -> None:
    cap = exhaustive_cap() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n={n} exceeds exhaustive cap {cap}")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(images)}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(i) = self(other(i))``."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.n
        lengths = []
        for start in range(self.n):
            if seen[start]:
                continue
            length, k = 0, start
            while not seen[k]:
                seen[k] = True
                k = self.images[k] - 1
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


@dataclass(frozen=True, order=True)
class Coset:
    """The 1-coset T_ij = {sigma : sigma(i) = j}."""

    i: int
    j: int

    def validate(self, n: int) -> None:
        if not (1 <= self.i <= n and 1 <= self.j <= n):
            raise ValueError(f"coset T_{self.i},{self.j} invalid for n={n}")

    def __str__(self) -> str:
        return f"T{self.i},{self.j}"


def rank(p: Permutation | Sequence[int]) -> int:
    """Lexicographic rank via the factorial number system."""
    images = list(p.images if isinstance(p, Permutation) else p)
    n = len(images)
    r = 0
    for i, x in enumerate(images):
        smaller_later = sum(1 for y in images[i + 1:] if y < x)
        r += smaller_later * factorial(n - 1 - i)
    return r


def unrank(n: int, r: int) -> Permutation:
    if not 0 <= r < factorial(n):
        raise ValueError(f"rank {r} out of range for S_{n}")
    pool = list(range(1, n + 1))
    images = []
    for k in range(n - 1, -1, -1):
        d, r = divmod(r, factorial(k))
        images.append(pool.pop(d))
    return Permutation(tuple(images))


def rank_many(perms: np.ndarray) -> np.ndarray:
    """Vectorized rank of a (k, n) array of one-line permutations."""
    perms = np.asarray(perms)
    n = perms.shape[1]
    r = np.zeros(perms.shape[0], dtype=np.int64)
    for i in range(n):
        digit = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        r += digit * factorial(n - 1 - i)
    return r


def unrank_many(n: int, ranks: np.ndarray) -> np.ndarray:
    """Vectorized inverse of :func:`rank_many`; returns 1-based images, shape (k, n)."""
    ranks = np.asarray(ranks, dtype=np.int64).copy()
    k = ranks.shape[0]
    digits = np.empty((k, n), dtype=np.int64)
    for pos in range(n):
        f = factorial(n - 1 - pos)
        digits[:, pos], ranks = np.divmod(ranks, f)
    out = np.empty((k, n), dtype=np.int8)
    used = np.zeros((k, n), dtype=bool)
    rows = np.arange(k)
    for pos in range(n):
        # value = position of the (d+1)-th unused point
        free_count = np.cumsum(~used, axis=1)
        idx = np.argmax(free_count == (digits[:, pos] + 1)[:, None], axis=1)
        used[rows, idx] = True
        out[:, pos] = idx + 1
    return out


@lru_cache(maxsize=None)
def all_perms(n: int) -> np.ndarray:
    """All of S_n as an (n!, n) int8 array in lexicographic (rank) order."""
    check_cap(n, max(exhaustive_cap(), 10))
    arr = np.array(list(permutations(range(1, n + 1))), dtype=np.int8).reshape(factorial(n), n)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def transposition_neighbours(n: int) -> np.ndarray:
    """Array of shape (C(n,2), n!) with ``out[t, r] = rank(unrank(r) * tau_t)``.

    Right multiplication by the transposition (i j) swaps positions i and j
    of the one-line notation.
    """
    P = all_perms(n)
    out = np.empty((comb(n, 2), P.shape[0]), dtype=np.int64)
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            Q = P.copy()
            Q[:, [i, j]] = Q[:, [j, i]]
            out[t] = rank_many(Q)
            t += 1
    out.setflags(write=False)
    return out


def derangement_count(n: int) -> int:
    """d_n = sum_i (-1)^i C(n,i) (n-i)!."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum((-1) ** i * comb(n, i) * factorial(n - i) for i in range(n + 1))


def is_derangement_pair(p: Permutation, q: Permutation) -> bool:
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return all(a != b for a, b in zip(p.images, q.images))


class PermFamily:
    """An immutable subset of S_n stored as a packed bitmap over lexicographic ranks."""

    __slots__ = ("n", "_bits", "size")

    def __init__(self, n: int, bits: np.ndarray, size: int | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        if n > STORAGE_CAP:
            raise CapExceeded(f"n={n} exceeds storage cap {STORAGE_CAP}")
        self.n = n
        bits = np.asarray(bits, dtype=np.uint8)
        bits.setflags(write=False)
        self._bits = bits
        self.size = int(np.unpackbits(bits, bitorder="little").sum()) if size is None else size

    @classmethod
    def from_mask(cls, n: int, mask: np.ndarray) -> PermFamily:
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (factorial(n),):
            raise ValueError(f"mask must have length {factorial(n)}")
        return cls(n, np.packbits(mask, bitorder="little"), int(mask.sum()))

    @classmethod
    def from_ranks(cls, n: int, ranks: Iterable[int]) -> PermFamily:
        total = factorial(n)
        ranks = np.unique(np.fromiter(ranks, dtype=np.int64))
        if ranks.size and (ranks[0] < 0 or ranks[-1] >= total):
            raise ValueError(f"rank out of range for S_{n}")
        mask = np.zeros(total, dtype=bool)
        mask[ranks] = True
        return cls.from_mask(n, mask)

    @classmethod
    def from_perms(cls, n: int, perms: Iterable[Permutation | Sequence[int]]) -> PermFamily:
        rows = [tuple(p.images if isinstance(p, Permutation) else p) for p in perms]
        for row in rows:
            if len(row) != n:
                raise ValueError(f"permutation {row} has wrong length for n={n}")
            Permutation(row)
        if not rows:
            return cls.empty(n)
        return cls.from_ranks(n, rank_many(np.array(rows, dtype=np.int64)))

    @classmethod
    def empty(cls, n: int) -> PermFamily:
        return cls.from_mask(n, np.zeros(factorial(n), dtype=bool))

    @classmethod
    def full(cls, n: int) -> PermFamily:
        return cls.from_mask(n, np.ones(factorial(n), dtype=bool))

    def mask(self) -> np.ndarray:
        return np.unpackbits(self._bits, count=factorial(self.n), bitorder="little").astype(bool)

    def ranks(self) -> np.ndarray:
        return np.flatnonzero(self.mask())

    def members(self) -> np.ndarray:
        """Images of the members as a (size, n) int8 array, in rank order."""
        return unrank_many(self.n, self.ranks())

    def __iter__(self) -> Iterator[Permutation]:
        for row in self.members():
            yield Permutation(tuple(row))

    def __len__(self) -> int:
        return self.size

    def __contains__(self, p: Permutation) -> bool:
        if p.n != self.n:
            return False
        r = rank(p)
        return bool((self._bits[r >> 3] >> (r & 7)) & 1)

    def _binop(self, other: PermFamily, op) -> PermFamily:
        if other.n != self.n:
            raise ValueError("families over different n")
        return PermFamily.from_mask(self.n, op(self.mask(), other.mask()))

    def __or__(self, other):
        return self._binop(other, np.logical_or)

    def __and__(self, other):
        return self._binop(other, np.logical_and)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a & ~b)

    def __xor__(self, other):
        return self._binop(other, np.logical_xor)

    def complement(self) -> PermFamily:
        return PermFamily.from_mask(self.n, ~self.mask())

    def __eq__(self, other):
        return (
            isinstance(other, PermFamily)
            and other.n == self.n
            and np.array_equal(self._bits, other._bits)
        )

    def __hash__(self):
        return hash((self.n, self._bits.tobytes()))

    def __repr__(self):
        return f"PermFamily(n={self.n}, size={self.size})"


def coset_members(n: int, T: Coset) -> PermFamily:
    T.validate(n)
    check_cap(n, STORAGE_CAP)
    if n <= max(exhaustive_cap(), 10):
        return PermFamily.from_mask(n, all_perms(n)[:, T.i - 1] == T.j)
    # rank-block construction avoids the full table
    others = [x for x in range(1, n + 1) if x != T.j]
    rows = []
    for rest in permutations(others):
        row = list(rest)
        row.insert(T.i - 1, T.j)
        rows.append(row)
    return PermFamily.from_ranks(n, rank_many(np.array(rows, dtype=np.int64)))


_HEADER_N = re.compile(r"^\s*#\s*n=(\d+)")


def read_family(path: str | Path) -> PermFamily:
    n = None
    declared_n = None
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            header = _HEADER_N.match(raw)
            if header and declared_n is None:
                declared_n = int(header.group(1))
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                row = tuple(int(tok) for tok in line.split())
            except ValueError:
                raise FamilyFormatError(f"non-integer token in {line!r}", lineno) from None
            if n is None:
                n = len(row)
            elif len(row) != n:
                raise FamilyFormatError(f"expected {n} images, got {len(row)}", lineno)
            if sorted(row) != list(range(1, n + 1)):
                raise FamilyFormatError(f"not a bijection on 1..{n}: {line!r}", lineno)
            rows.append(row)
    if n is None:
        # no data lines: fall back to the "# n=K" header comment, else S_1
        return PermFamily.empty(declared_n or 1)
    if n > STORAGE_CAP:
        raise CapExceeded(f"n={n} exceeds storage cap {STORAGE_CAP}")
    return PermFamily.from_ranks(n, rank_many(np.array(rows, dtype=np.int64)))


def format_family(F: PermFamily, comment: str | None = None) -> str:
    lines = [f"# n={F.n} size={F.size}"]
    if comment:
        lines.append(f"# {comment}")
    lines += [" ".join(str(int(x)) for x in row) for row in F.members()]
    return "\n".join(lines) + "\n"


def write_family(F: PermFamily, path: str | Path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_family(F, comment))
