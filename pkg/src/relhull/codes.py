"""Linear codes, monomial maps and brute-force weight oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from relhull.errors import (
    EmptyGenerator,
    EnumerationTooLarge,
    LengthMismatch,
    RangeError,
    UndefinedDistance,
    ZeroScalingEntry,
)
from relhull.field import FieldSpec
from relhull.matrix import MatrixGF, kernel_array, rref_array

ENUMERATION_BUDGET = 1 << 24
_BLOCK = 1 << 14


class LinearCode:
    """An [n, k] code over ``field`` held by its RREF generator matrix.

    Two codes are equal exactly when their generators are equal.
    """

    def __init__(self, field: FieldSpec, n: int, gen: np.ndarray, name: str | None = None):
        gen = np.asarray(gen, dtype=np.int64).reshape(-1, n)
        red, pivots = rref_array(field, gen)
        self.field = field
        self.n = n
        self.gen = MatrixGF(field, red[: len(pivots)].reshape(len(pivots), n))
        self.pivots = tuple(pivots)
        self.name = name

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def parity_check(self) -> MatrixGF:
        """Generator of the dual code, (n - k) x n."""
        return MatrixGF(self.field, kernel_array(self.field, self.gen.data).reshape(-1, self.n))

    def dual(self) -> LinearCode:
        return dual(self)

    def contains(self, words) -> np.ndarray:
        """Membership of each row of ``words``."""
        w = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if w.shape[1] != self.n:
            raise LengthMismatch(f"words of length {w.shape[1]} vs n = {self.n}")
        h = self.parity_check.data
        if h.shape[0] == 0:
            return np.ones(w.shape[0], dtype=bool)
        return ~self.field.matmul(w, h.T).any(axis=1)

    def issubcode(self, other: LinearCode) -> bool:
        _compatible(self, other)
        return bool(other.contains(self.gen.data).all()) if self.k else True

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.gen == other.gen

    def __hash__(self):
        return hash((self.field, self.n, self.gen))

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<{label}[{self.n},{self.k}]_{self.q} code>"


def code_from_rows(field: FieldSpec, rows, name: str | None = None) -> LinearCode:
    """Code spanned by ``rows`` (dependent rows are dropped)."""
    m = rows if isinstance(rows, MatrixGF) else None
    if m is None:
        if len(rows) == 0:
            raise EmptyGenerator("no generator rows given")
        m = MatrixGF(field, rows)
    field.check_same(m.field)
    if m.rows == 0 or m.cols == 0:
        raise EmptyGenerator("no generator rows given")
    return LinearCode(field, m.cols, m.data, name)


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, np.zeros((0, n), dtype=np.int64))


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, np.eye(n, dtype=np.int64))


def random_code(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    """A uniformly random [n, k] code (rejection on rank)."""
    if not 0 <= k <= n:
        raise RangeError(f"k = {k} outside [0, {n}]")
    while True:
        c = LinearCode(field, n, field.random((k, n), rng))
        if c.k == k:
            return c


def _compatible(c1: LinearCode, c2: LinearCode) -> None:
    c1.field.check_same(c2.field)
    if c1.n != c2.n:
        raise LengthMismatch(f"lengths {c1.n} and {c2.n} differ")


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.field, c.n, c.parity_check.data)


def relative_hull(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """``C1 ∩ C2^⊥`` as ``{x G1 : x in ker(G2 G1^T)}``."""
    _compatible(c1, c2)
    f = c1.field
    g1, g2 = c1.gen.data, c2.gen.data
    prod = f.matmul(g2, g1.T)
    x = kernel_array(f, prod.reshape(c2.k, c1.k))
    return LinearCode(f, c1.n, f.matmul(x, g1) if x.size else np.zeros((0, c1.n), dtype=np.int64))


def hull(c: LinearCode) -> LinearCode:
    return relative_hull(c, c)


def schur(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Span of componentwise products of codewords (generator pairs suffice)."""
    _compatible(c1, c2)
    f = c1.field
    prods = f.mul(c1.gen.data[:, None, :], c2.gen.data[None, :, :]).reshape(-1, c1.n)
    return LinearCode(f, c1.n, prods)


def galois_image(c: LinearCode, e: int) -> LinearCode:
    """Entrywise ``x -> x**(p**e)`` image of the code."""
    return LinearCode(c.field, c.n, c.field.frob(c.gen.data, e))


def intersection(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Row-space intersection, computed independently of any product matrix."""
    _compatible(c1, c2)
    return dual(LinearCode(c1.field, c1.n, np.vstack([c1.parity_check.data, c2.parity_check.data])))


def code_sum(c1: LinearCode, c2: LinearCode) -> LinearCode:
    _compatible(c1, c2)
    return LinearCode(c1.field, c1.n, np.vstack([c1.gen.data, c2.gen.data]))


# monomial maps ---------------------------------------------------------------


@dataclass(frozen=True)
class MonomialMap:
    """The isometry ``c -> c I_lam P_sigma``: coordinate i is scaled by
    ``lam[i]`` and moved to position ``sigma[i]``."""

    field: FieldSpec
    lam: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(self.field.scalar(x) for x in self.lam)
        sigma = tuple(int(s) for s in self.sigma)
        if len(lam) != len(sigma):
            raise LengthMismatch(f"scaling length {len(lam)} vs permutation length {len(sigma)}")
        if any(x == 0 for x in lam):
            raise ZeroScalingEntry("monomial map with a zero scaling entry")
        if sorted(sigma) != list(range(len(sigma))):
            raise RangeError(f"{list(sigma)} is not a permutation")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "sigma", sigma)

    @property
    def n(self) -> int:
        return len(self.lam)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MonomialMap:
        return cls(field, (1,) * n, tuple(range(n)))

    @classmethod
    def scaling(cls, field: FieldSpec, lam: Sequence) -> MonomialMap:
        return cls(field, tuple(lam), tuple(range(len(lam))))

    @classmethod
    def single_scaling(cls, field: FieldSpec, n: int, j: int, value) -> MonomialMap:
        lam = [1] * n
        lam[j] = field.scalar(value)
        return cls.scaling(field, lam)

    @classmethod
    def permutation(cls, field: FieldSpec, sigma: Sequence[int]) -> MonomialMap:
        return cls(field, (1,) * len(sigma), tuple(sigma))

    @classmethod
    def transposition(cls, field: FieldSpec, n: int, i: int, j: int) -> MonomialMap:
        sigma = list(range(n))
        sigma[i], sigma[j] = j, i
        return cls.permutation(field, sigma)

    @classmethod
    def random(cls, field: FieldSpec, n: int, rng: np.random.Generator) -> MonomialMap:
        return cls(field, tuple(field.random(n, rng, nonzero=True)), tuple(rng.permutation(n)))

    def apply(self, words) -> np.ndarray:
        w = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if w.shape[1] != self.n:
            raise LengthMismatch(f"map of length {self.n} applied to words of length {w.shape[1]}")
        out = np.zeros_like(w)
        out[:, list(self.sigma)] = self.field.mul(w, np.asarray(self.lam))
        return out

    def then(self, other: MonomialMap) -> MonomialMap:
        """``self`` followed by ``other`` (matrix product ``M_self @ M_other``)."""
        self.field.check_same(other.field)
        if other.n != self.n:
            raise LengthMismatch("maps of different lengths")
        s1 = np.asarray(self.sigma)
        lam = self.field.mul(np.asarray(self.lam), np.asarray(other.lam)[s1])
        sigma = np.asarray(other.sigma)[s1]
        return MonomialMap(self.field, tuple(lam.tolist()), tuple(sigma.tolist()))

    def inverse(self) -> MonomialMap:
        s_inv = np.argsort(self.sigma)
        lam = self.field.inv(np.asarray(self.lam))[s_inv]
        return MonomialMap(self.field, tuple(lam.tolist()), tuple(s_inv.tolist()))

    def matrix(self) -> MatrixGF:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        m[np.arange(self.n), list(self.sigma)] = self.lam
        return MatrixGF(self.field, m)

    def is_identity(self) -> bool:
        return all(x == 1 for x in self.lam) and list(self.sigma) == list(range(self.n))

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "sigma": list(self.sigma)}


def apply_map(c: LinearCode, m: MonomialMap) -> LinearCode:
    c.field.check_same(m.field)
    if m.n != c.n:
        raise LengthMismatch(f"map of length {m.n} on a code of length {c.n}")
    return LinearCode(c.field, c.n, m.apply(c.gen.data) if c.k else c.gen.data)


# enumeration ----------------------------------------------------------------


def check_budget(q: int, k: int, budget: int = ENUMERATION_BUDGET) -> None:
    size = q**k
    if size > budget:
        raise EnumerationTooLarge(size, budget)


def span_blocks(field: FieldSpec, rows: np.ndarray, n: int) -> Iterator[np.ndarray]:
    """All words of the row span, in blocks, in a fixed order."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
    q = field.q
    ki = 0
    while ki < rows.shape[0] and q ** (ki + 1) <= _BLOCK:
        ki += 1
    outer, inner = rows[: rows.shape[0] - ki], rows[rows.shape[0] - ki :]
    block = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(q, dtype=np.int64)
    for g in inner:
        multiples = field.mul(scalars[:, None], g[None, :])
        block = field.add(multiples[:, None, :], block[None, :, :]).reshape(-1, n)
    if outer.shape[0] == 0:
        yield block
        return
    multiples = field.mul(scalars[None, :, None], outer[:, None, :])  # (ko, q, n)
    for coeffs in itertools.product(range(q), repeat=outer.shape[0]):
        offset = np.zeros(n, dtype=np.int64)
        for t, c in enumerate(coeffs):
            if c:
                offset = field.add(offset, multiples[t, c])
        yield field.add(block, offset[None, :])


def projective_blocks(c: LinearCode) -> Iterator[np.ndarray]:
    """One representative of each nonzero codeword up to scalars.

    Words are ``g_i + span(g_{i+1}, ...)`` for each generator row ``g_i``.
    """
    g = c.gen.data
    for i in range(c.k):
        for block in span_blocks(c.field, g[i + 1 :], c.n):
            yield c.field.add(block, g[i][None, :])


def codewords(c: LinearCode, budget: int = ENUMERATION_BUDGET) -> Iterator[np.ndarray]:
    check_budget(c.q, c.k, budget)
    yield from span_blocks(c.field, c.gen.data, c.n)


def min_distance(c: LinearCode, budget: int = ENUMERATION_BUDGET) -> int:
    if c.k == 0:
        raise UndefinedDistance("minimum distance of the zero code is undefined")
    check_budget(c.q, c.k, budget)
    best = c.n
    for block in projective_blocks(c):
        best = min(best, int(np.count_nonzero(block, axis=1).min()))
        if best == 1:
            break
    return best


def max_weight(c: LinearCode, budget: int = ENUMERATION_BUDGET) -> int:
    check_budget(c.q, c.k, budget)
    best = 0
    for block in projective_blocks(c):
        best = max(best, int(np.count_nonzero(block, axis=1).max()))
        if best == c.n:
            break
    return best


@dataclass(frozen=True)
class WeightEnumerator:
    counts: tuple[int, ...]

    def to_json(self) -> list[int]:
        return list(self.counts)


def weight_enumerator(c: LinearCode, budget: int = ENUMERATION_BUDGET) -> WeightEnumerator:
    check_budget(c.q, c.k, budget)
    hist = np.zeros(c.n + 1, dtype=np.int64)
    for block in projective_blocks(c):
        hist += np.bincount(np.count_nonzero(block, axis=1), minlength=c.n + 1)
    hist *= c.q - 1
    hist[0] += 1
    return WeightEnumerator(tuple(int(x) for x in hist))


def weight_of_difference(a: LinearCode, b: LinearCode, budget: int = ENUMERATION_BUDGET) -> int | None:
    """Least weight of a word of ``a`` outside ``b``; ``None`` when ``a ⊆ b``."""
    _compatible(a, b)
    if a.issubcode(b):
        return None
    check_budget(a.q, a.k, budget)
    best = None
    for block in projective_blocks(a):
        outside = ~b.contains(block)
        if outside.any():
            w = int(np.count_nonzero(block[outside], axis=1).min())
            best = w if best is None else min(best, w)
            if best == 1:
                break
    return best


def find_full_weight_word(c: LinearCode, budget: int = ENUMERATION_BUDGET) -> np.ndarray | None:
    """First codeword (in enumeration order) with no zero entry, if any."""
    if c.k == 0:
        return None if c.n else np.zeros(0, dtype=np.int64)
    if np.any(~c.gen.data.any(axis=0)):
        return None
    check_budget(c.q, c.k, budget)
    for block in projective_blocks(c):
        full = np.flatnonzero(np.all(block != 0, axis=1))
        if full.size:
            return block[full[0]].copy()
    return None
