"""Exact arithmetic in GF(p^l), p^l <= 2^16.

Elements are integer codes in ``[0, q)``: the base-p digits of a code are the
polynomial-basis coefficients, constant term first.  The vectorised methods
on :class:`FieldSpec` act on numpy arrays of codes; :class:`FieldElement` is
the scalar wrapper.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from relhull import polynomials as poly
from relhull._conway import CONWAY
from relhull.errors import (
    DivisionByZero,
    ExponentOutOfRange,
    FieldTooLarge,
    MixedFields,
    NonPrimeCharacteristic,
    RangeError,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16
# full addition/multiplication tables are kept below this order
_TABLE_LIMIT = 256


def conway_polynomial(p: int, l: int) -> tuple[int, ...]:
    if l == 1:
        g = next(g for g in range(1, p) if poly.order_is_full([g], [0, 1], p))
        return ((-g) % p, 1)
    return CONWAY[(p, l)]


class FieldSpec:
    """GF(p^l) presented as GF(p)[x]/(modulus).

    Build with :func:`field_new`; instances are immutable and compare equal
    when ``(p, l, modulus)`` agree.
    """

    def __init__(self, p: int, l: int, modulus: Sequence[int]):
        self.p = p
        self.l = l
        self.q = p**l
        self.modulus = tuple(int(c) % p for c in modulus)
        q, f = self.q, list(self.modulus)

        self._pw = p ** np.arange(l, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        self._digits = (codes[:, None] // self._pw[None, :]) % p

        x = [0, 1] if l > 1 else [(-self.modulus[0]) % p]
        if poly.order_is_full(x, f, p):
            gen = x
        else:
            gen = next(
                c for c in (self._coeffs_of(k) for k in range(2, q)) if poly.order_is_full(c, f, p)
            )
        self._gen_code = self._code_of(gen)

        # multiplication by gen as an l x l matrix over GF(p), rows = x^i * gen
        mat = np.zeros((l, l), dtype=np.int64)
        for i in range(l):
            row = poly.polymulmod([0] * i + [1], gen, f, p)
            mat[i, : len(row)] = row
        exp = np.empty(2 * (q - 1), dtype=np.int64)
        v = np.zeros(l, dtype=np.int64)
        v[0] = 1
        for i in range(q - 1):
            exp[i] = int(v @ self._pw)
            v = (v @ mat) % p
        exp[q - 1 :] = exp[: q - 1]
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self._exp, self._log = exp, log

        self._neg = ((p - self._digits) % p) @ self._pw
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self._inv = inv
        self._add_table = self._mul_table = None
        if q <= _TABLE_LIMIT:
            self._add_table = self._slow_add(codes[:, None], codes[None, :])
            self._mul_table = self._slow_mul(codes[:, None], codes[None, :])
        for arr in (self._digits, self._exp, self._log, self._neg, self._inv):
            arr.setflags(write=False)

    # construction helpers -------------------------------------------------
    def _coeffs_of(self, code: int) -> list[int]:
        return poly.trim([(code // self.p**i) % self.p for i in range(self.l)])

    def _code_of(self, coeffs: Sequence[int]) -> int:
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    # identity ---------------------------------------------------------------
    def _key(self):
        return (self.p, self.l, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.l == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.l}, modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        return {"p": self.p, "l": self.l, "modulus": list(self.modulus)}

    # scalars ----------------------------------------------------------------
    def __call__(self, value) -> FieldElement:
        """Element with integer code ``value`` (or a copy of an element)."""
        if isinstance(value, FieldElement):
            self.check_same(value.field)
            return value
        code = int(value)
        if not 0 <= code < self.q:
            raise RangeError(f"element code {code} outside [0, {self.q})")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.l:
            raise RangeError("too many coefficients")
        return FieldElement(self, self._code_of(coeffs))

    def scalar(self, value) -> int:
        """Code of ``value``.

        Nonnegative integers are element codes; negative integers name
        prime-subfield elements, so ``-1`` is minus one in every field.
        """
        if isinstance(value, FieldElement):
            self.check_same(value.field)
            return value.code
        v = int(value)
        if v < 0:
            return v % self.p
        if v >= self.q:
            raise RangeError(f"element code {v} outside [0, {self.q})")
        return v

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self._gen_code)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.q)]

    def units(self) -> np.ndarray:
        return np.arange(1, self.q, dtype=np.int64)

    def check_same(self, other: FieldSpec) -> None:
        if other is not self and other != self:
            raise MixedFields(f"{self!r} vs {other!r}")

    def check_frobenius_exponent(self, e: int) -> None:
        if not 0 <= e < self.l:
            raise ExponentOutOfRange(f"Frobenius exponent {e} not in [0, {self.l})")

    # vectorised arithmetic on codes -----------------------------------------
    def asarray(self, values) -> np.ndarray:
        arr = np.asarray(values, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise RangeError(f"element codes must lie in [0, {self.q})")
        return arr

    def _slow_add(self, a, b):
        if self.l == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pw

    def _slow_mul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.l == 1:
            return (a * b) % self.p
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def add(self, a, b) -> np.ndarray:
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._slow_add(np.asarray(a), np.asarray(b))

    def neg(self, a) -> np.ndarray:
        return self._neg[a]

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self._neg[b])

    def mul(self, a, b) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._slow_mul(a, b)

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b) -> np.ndarray:
        return self.mul(a, self.inv(b))

    def power(self, a, k: int) -> np.ndarray:
        """Entrywise ``a**k``; ``0**0 == 1``, negative ``k`` needs nonzero ``a``."""
        a = np.asarray(a, dtype=np.int64)
        if k < 0:
            return self.power(self.inv(a), -k)
        if k == 0:
            return np.ones_like(a)
        out = self._exp[(self._log[a] * (k % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def frob(self, a, e: int) -> np.ndarray:
        """Entrywise ``a**(p**e)``."""
        self.check_frobenius_exponent(e)
        if e == 0:
            return np.asarray(a, dtype=np.int64).copy()
        return self.power(a, self.p**e)

    def sum(self, a, axis: int = 0) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.l == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        axis = axis % a.ndim
        return (self._digits[a].sum(axis=axis) % self.p) @ self._pw

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product with numpy's rules for 1-d operands."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        va, vb = a.ndim == 1, b.ndim == 1
        if va:
            a = a[None, :]
        if vb:
            b = b[:, None]
        if a.shape[-1] == 0:
            out = np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
        elif self.l == 1:
            out = (a @ b) % self.p
        else:
            out = self.sum(self.mul(a[..., :, :, None], b[..., None, :, :]), axis=-2)
        if va and vb:
            return out[..., 0, 0]
        if va:
            return out[..., 0, :]
        if vb:
            return out[..., 0]
        return out

    def dot(self, x, y) -> int:
        return int(self.sum(self.mul(np.asarray(x), np.asarray(y)), axis=0))

    def random(self, shape, rng: np.random.Generator, nonzero: bool = False) -> np.ndarray:
        if nonzero:
            return rng.integers(1, self.q, size=shape, dtype=np.int64)
        return rng.integers(0, self.q, size=shape, dtype=np.int64)


class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = int(code)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self.field._digits[self.code])

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field.check_same(other.field)
            return other.code
        if isinstance(other, (int, np.integer)):
            return self.field.scalar(other)
        return NotImplemented

    def _wrap(self, code) -> FieldElement:
        return FieldElement(self.field, int(code))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self * self._wrap(o).inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o) * self.inv()

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __pow__(self, k: int):
        return self._wrap(self.field.power(self.code, int(k)))

    def inv(self) -> FieldElement:
        return self._wrap(self.field.inv(self.code))

    def frobenius(self, e: int) -> FieldElement:
        return frobenius(self, e)

    def order(self) -> int:
        if self.code == 0:
            raise DivisionByZero("zero has no multiplicative order")
        q1 = self.field.q - 1
        return q1 // np.gcd(int(self.field._log[self.code]), q1)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return -self.field.p < other < self.field.q and self.code == self.field.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __index__(self):
        return self.code

    def __repr__(self):
        if self.field.l == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(f"{c}" if not mono else (mono if c == 1 else f"{c}{mono}"))
        return "+".join(reversed(terms)) or "0"


@lru_cache(maxsize=None)
def _field_cached(p: int, l: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not poly.is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if l < 1:
        raise RangeError(f"extension degree {l} must be positive")
    if p**l > MAX_ORDER:
        raise FieldTooLarge(f"{p}^{l} exceeds {MAX_ORDER}")
    if modulus is None:
        modulus = conway_polynomial(p, l)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != l + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {l}, got {list(modulus)}")
        if not poly.is_irreducible(list(modulus), p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    field = FieldSpec(p, l, modulus)
    g = field._coeffs_of(field._gen_code)
    if not poly.order_is_full(g or [0], list(field.modulus), p):  # pragma: no cover
        raise RuntimeError("primitive element check failed")
    return field


def field_new(p: int, l: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """GF(p^l); the Conway polynomial is the default modulus."""
    return _field_cached(int(p), int(l), None if modulus is None else tuple(modulus))


def gf(q: int, modulus: Iterable[int] | None = None) -> FieldSpec:
    """GF(q) for a prime power ``q``."""
    q = int(q)
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    l, r = 0, q
    while r % p == 0:
        r //= p
        l += 1
    if r != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return field_new(p, l, modulus)


def frobenius(x: FieldElement, e: int) -> FieldElement:
    """``x**(p**e)``."""
    return FieldElement(x.field, int(x.field.frob(x.code, e)))
