"""Monomial evaluation codes on Cartesian grids.

Points of ``A_1 x ... x A_m`` are listed lexicographically by factor index
(last factor fastest), so on the full grid ``F_q^m`` the origin is point 0.
Exponent tuples index the standard monomials ``x^a`` with ``a_i < |A_i|``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from relhull.codes import (
    ENUMERATION_BUDGET,
    LinearCode,
    dual,
    find_full_weight_word,
    schur,
    zero_code,
)
from relhull.errors import (
    DOutOfRange,
    EmptyGenerator,
    ExponentOutOfBox,
    NoTwistFound,
    ParseError,
    RangeError,
)
from relhull.field import FieldSpec

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class CartesianGrid:
    field: FieldSpec
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        factors = tuple(tuple(self.field.scalar(x) for x in a) for a in self.factors)
        if not factors:
            raise RangeError("a grid needs at least one factor")
        for a in factors:
            if not a:
                raise RangeError("empty grid factor")
            if len(set(a)) != len(a):
                raise RangeError(f"grid factor {list(a)} repeats an element")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def full(cls, field: FieldSpec, m: int) -> CartesianGrid:
        return cls(field, tuple(tuple(range(field.q)) for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.factors)

    @property
    def n(self) -> int:
        return math.prod(self.sizes)

    @property
    def points(self) -> np.ndarray:
        """``(n, m)`` array of point coordinates (element codes)."""
        return np.array(list(itertools.product(*self.factors)), dtype=np.int64).reshape(self.n, self.m)

    def box(self) -> list[Exponent]:
        """Every standard monomial exponent, in lexicographic order."""
        return list(itertools.product(*(range(s) for s in self.sizes)))

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "factors": [list(a) for a in self.factors]}


@dataclass(frozen=True)
class ExponentSet:
    m: int
    exponents: frozenset

    def __post_init__(self):
        exps = frozenset(tuple(int(x) for x in a) for a in self.exponents)
        for a in exps:
            if len(a) != self.m or min(a, default=0) < 0:
                raise ExponentOutOfBox(f"exponent {a} is not a nonnegative {self.m}-tuple")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, exponents: Iterable[Sequence[int]], m: int | None = None) -> ExponentSet:
        exps = [tuple(a) for a in exponents]
        if m is None:
            if not exps:
                raise RangeError("cannot infer the arity of an empty exponent set")
            m = len(exps[0])
        return cls(m, frozenset(exps))

    @classmethod
    def parse(cls, monomials: Iterable[str], m: int) -> ExponentSet:
        """From strings such as ``"1"``, ``"x^2y"``, ``"x1*x3^2"``.

        With ``m <= 3`` the variables may be written ``x, y, z``.
        """
        return cls(m, frozenset(parse_monomial(s, m) for s in monomials))

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, a):
        return tuple(a) in self.exponents

    def sorted(self) -> list[Exponent]:
        return sorted(self.exponents, key=lambda a: (sum(a), a))

    def __or__(self, other: ExponentSet) -> ExponentSet:
        return ExponentSet(self.m, self.exponents | other.exponents)

    def __and__(self, other: ExponentSet) -> ExponentSet:
        return ExponentSet(self.m, self.exponents & other.exponents)

    def __sub__(self, other: ExponentSet) -> ExponentSet:
        return ExponentSet(self.m, self.exponents - other.exponents)

    def __le__(self, other: ExponentSet) -> bool:
        return self.exponents <= other.exponents

    def to_json(self) -> dict:
        return {"m": self.m, "exponents": [list(a) for a in self.sorted()]}

    def __repr__(self):
        return "{" + ", ".join(format_monomial(a) for a in self.sorted()) + "}"


_VARS = "xyz"


def parse_monomial(text: str, m: int) -> Exponent:
    s = text.replace(" ", "").replace("*", "")
    out = [0] * m
    if s in ("", "1"):
        return tuple(out)
    pos = 0
    pat = re.compile(r"([a-z])(\d*)(?:\^(\d+))?")
    while pos < len(s):
        mt = pat.match(s, pos)
        if not mt:
            raise ParseError(f"cannot parse monomial {text!r}")
        name, idx, power = mt.groups()
        if idx:
            var = int(idx) - 1
        elif m <= len(_VARS) and name in _VARS:
            var = _VARS.index(name)
        else:
            raise ParseError(f"unknown variable in {text!r}")
        if not 0 <= var < m:
            raise ParseError(f"variable index out of range in {text!r}")
        out[var] += int(power) if power else 1
        pos = mt.end()
    return tuple(out)


def format_monomial(a: Exponent) -> str:
    names = _VARS if len(a) <= len(_VARS) else [f"x{i + 1}" for i in range(len(a))]
    parts = [names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e]
    return "".join(parts) or "1"


def _check_box(a: Exponent, grid: CartesianGrid) -> None:
    if len(a) != grid.m or any(not 0 <= x < s for x, s in zip(a, grid.sizes)):
        raise ExponentOutOfBox(f"exponent {a} outside the box {grid.sizes}")


def evaluate(a: Exponent, grid: CartesianGrid) -> np.ndarray:
    """The word ``(x^a(P_1), ..., x^a(P_n))``."""
    f = grid.field
    pts = grid.points
    word = np.ones(grid.n, dtype=np.int64)
    for i, e in enumerate(a):
        word = f.mul(word, f.power(pts[:, i], e))
    return word


def eval_matrix(exps: Iterable[Exponent], grid: CartesianGrid) -> np.ndarray:
    rows = []
    for a in exps:
        _check_box(a, grid)
        rows.append(evaluate(a, grid))
    return np.array(rows, dtype=np.int64).reshape(-1, grid.n)


def eval_code(M: ExponentSet, grid: CartesianGrid, allow_empty: bool = False) -> LinearCode:
    """``C_M``; its dimension is ``|M|``."""
    if len(M) == 0:
        if allow_empty:
            return zero_code(grid.field, grid.n)
        raise EmptyGenerator("empty exponent set")
    if M.m != grid.m:
        raise ExponentOutOfBox(f"{M.m}-variate set on a {grid.m}-dimensional grid")
    code = LinearCode(grid.field, grid.n, eval_matrix(M.sorted(), grid))
    if code.k != len(M):  # pragma: no cover - standard monomials are independent
        raise RuntimeError("standard monomial evaluations are dependent")
    return code


def fb(u: Exponent, grid: CartesianGrid) -> int:
    _check_box(tuple(u), grid)
    return math.prod(s - a for s, a in zip(grid.sizes, u))


def footprint_bound(M: ExponentSet, grid: CartesianGrid) -> int:
    if len(M) == 0:
        raise EmptyGenerator("empty exponent set")
    return min(fb(u, grid) for u in M.exponents)


def _check_d(d: int, grid: CartesianGrid) -> None:
    if not 1 <= d <= grid.n:
        raise DOutOfRange(f"d = {d} outside [1, {grid.n}]")


def hyperbolic(d: int, grid: CartesianGrid) -> ExponentSet:
    """``H_d``: box exponents with footprint at least ``d``."""
    _check_d(d, grid)
    return ExponentSet(grid.m, frozenset(a for a in grid.box() if fb(a, grid) >= d))


def hyperbolic_dual(d: int, grid: CartesianGrid) -> ExponentSet:
    """Box exponents with ``prod(a_i + 1) < d``."""
    _check_d(d, grid)
    return ExponentSet(grid.m, frozenset(a for a in grid.box() if math.prod(x + 1 for x in a) < d))


def is_decreasing(M: ExponentSet) -> bool:
    """Closed under componentwise decrease (divisibility of monomials)."""
    for a in M.exponents:
        for i, x in enumerate(a):
            if x and a[:i] + (x - 1,) + a[i + 1 :] not in M.exponents:
                return False
    return True


def lagrange_weights(grid: CartesianGrid) -> np.ndarray:
    """``prod_i 1 / psi_i'(P_i)`` with ``psi_i`` the vanishing polynomial of ``A_i``."""
    f = grid.field
    lam = np.ones(1, dtype=np.int64)
    for a in grid.factors:
        arr = np.asarray(a, dtype=np.int64)
        diffs = f.sub(arr[:, None], arr[None, :])
        np.fill_diagonal(diffs, 1)
        deriv = np.ones(arr.size, dtype=np.int64)
        for j in range(arr.size):
            deriv = f.mul(deriv, diffs[:, j])
        # last factor varies fastest, matching the point order
        lam = f.mul(lam[:, None], f.inv(deriv)[None, :]).reshape(-1)
    return lam


@dataclass(frozen=True)
class Twist:
    lam: tuple[int, ...]
    verified: bool
    method: str

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "verified": self.verified, "method": self.method}


def _twist_ok(lam: np.ndarray, h: LinearCode, hperp_rows: np.ndarray, f: FieldSpec) -> bool:
    if np.any(lam == 0):
        return False
    if hperp_rows.shape[0] == 0:
        return True
    twisted = f.mul(hperp_rows, lam[None, :])
    ortho = not f.matmul(twisted, h.gen.data.T).any() if h.k else True
    dims = LinearCode(f, h.n, twisted).k == h.n - h.k
    return ortho and dims


def dual_twist(d: int, grid: CartesianGrid, budget: int = ENUMERATION_BUDGET) -> Twist:
    """A full-weight ``lam`` with ``(C_{H_d})^⊥ = C_{H_d^⊥} I_lam``.

    Tries the Lagrange weights first (normalised so ``lam_0 = 1``), then a
    search for a full-weight word of ``(C_{H_d} ⋆ C_{H_d^⊥})^⊥``.
    """
    f = grid.field
    h = eval_code(hyperbolic(d, grid), grid)
    hd = hyperbolic_dual(d, grid)
    rows = eval_matrix(hd.sorted(), grid) if len(hd) else np.zeros((0, grid.n), dtype=np.int64)
    lam = lagrange_weights(grid)
    lam = f.mul(lam, f.inv(lam[0]))
    if _twist_ok(lam, h, rows, f):
        return Twist(tuple(int(x) for x in lam), True, "lagrange")
    if len(hd):
        word = find_full_weight_word(dual(schur(h, LinearCode(f, grid.n, rows))), budget)
        if word is not None:
            word = f.mul(word, f.inv(word[0]))
            if _twist_ok(word, h, rows, f):
                return Twist(tuple(int(x) for x in word), True, "search")
    raise NoTwistFound(f"no full-weight twist found for d = {d}")


def grlex_key(a: Exponent, priority: Sequence[int] | None = None):
    """Sort key for graded lex; ``priority`` lists variables from largest."""
    pr = range(len(a)) if priority is None else priority
    return (sum(a),) + tuple(a[i] for i in pr)
