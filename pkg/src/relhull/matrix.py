"""Dense matrices over a finite field.

:class:`MatrixGF` is an immutable wrapper around an int64 array of element
codes.  Elimination uses first-nonzero pivoting, so every result here is
deterministic.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from relhull.errors import DimensionMismatch, ZeroScalingEntry
from relhull.field import FieldElement, FieldSpec


class MatrixGF:
    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        if isinstance(data, MatrixGF):
            field.check_same(data.field)
            data = data.data
        elif _has_elements(data):
            data = [[field.scalar(x) for x in row] for row in data]
        arr = np.asarray(data, dtype=np.int64)
        # negative integers name prime-subfield elements, as in FieldSpec.scalar
        arr = field.asarray(np.where(arr < 0, arr % field.p, arr))
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {arr.shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixGF:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixGF:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def diagonal(cls, field: FieldSpec, values) -> MatrixGF:
        return cls(field, np.diag(np.asarray([field.scalar(v) for v in values], dtype=np.int64)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> MatrixGF:
        return MatrixGF(self.field, self.data.T)

    def __getitem__(self, idx):
        out = self.data[idx]
        if np.ndim(out) == 0:
            return FieldElement(self.field, int(out))
        return MatrixGF(self.field, np.atleast_2d(out))

    def _other(self, other: MatrixGF) -> np.ndarray:
        self.field.check_same(other.field)
        return other.data

    def __add__(self, other: MatrixGF) -> MatrixGF:
        o = self._other(other)
        if o.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} + {o.shape}")
        return MatrixGF(self.field, self.field.add(self.data, o))

    def __sub__(self, other: MatrixGF) -> MatrixGF:
        o = self._other(other)
        if o.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} - {o.shape}")
        return MatrixGF(self.field, self.field.sub(self.data, o))

    def __neg__(self) -> MatrixGF:
        return MatrixGF(self.field, self.field.neg(self.data))

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        o = self._other(other)
        if self.cols != o.shape[0]:
            raise DimensionMismatch(f"{self.shape} @ {o.shape}")
        return MatrixGF(self.field, self.field.matmul(self.data, o))

    def scale(self, c) -> MatrixGF:
        return MatrixGF(self.field, self.field.mul(self.field.scalar(c), self.data))

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"MatrixGF({self.field!r}, {self.data.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def rank(self) -> int:
        return rank(self)


def _has_elements(data) -> bool:
    if isinstance(data, np.ndarray):
        return False
    for row in data:
        if isinstance(row, FieldElement):
            return True
        if isinstance(row, (list, tuple)):
            return any(isinstance(x, FieldElement) for x in row)
    return False


def vstack(mats: Sequence[MatrixGF]) -> MatrixGF:
    field = mats[0].field
    for m in mats:
        field.check_same(m.field)
    return MatrixGF(field, np.vstack([m.data for m in mats]))


def hstack(mats: Sequence[MatrixGF]) -> MatrixGF:
    field = mats[0].field
    for m in mats:
        field.check_same(m.field)
    return MatrixGF(field, np.hstack([m.data for m in mats]))


def rref_array(field: FieldSpec, a: np.ndarray, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of a code array.

    Pivots are searched only among the first ``ncols`` columns (all by
    default); row operations act on the full width, so augmented blocks
    ride along.
    """
    a = np.array(a, dtype=np.int64)
    r, c = a.shape
    ncols = c if ncols is None else ncols
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == r:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        if a[row, col] != 1:
            a[row] = field.mul(field.inv(a[row, col]), a[row])
        factors = a[:, col].copy()
        factors[row] = 0
        if factors.any():
            a = field.sub(a, field.mul(factors[:, None], a[row][None, :]))
        pivots.append(col)
        row += 1
    return a, pivots


def rref(m: MatrixGF) -> tuple[MatrixGF, list[int]]:
    out, pivots = rref_array(m.field, m.data)
    return MatrixGF(m.field, out), pivots


def rank(m: MatrixGF) -> int:
    return len(rref_array(m.field, m.data)[1])


def kernel_array(field: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Rows spanning ``{x : a @ x.T == 0}``."""
    a = np.asarray(a, dtype=np.int64)
    r, c = a.shape
    red, pivots = rref_array(field, a)
    free = [j for j in range(c) if j not in set(pivots)]
    basis = np.zeros((len(free), c), dtype=np.int64)
    for t, j in enumerate(free):
        basis[t, j] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = field.neg(red[i, j])
    return basis


def kernel(m: MatrixGF) -> MatrixGF:
    return MatrixGF(m.field, kernel_array(m.field, m.data).reshape(-1, m.cols))


def frobenius_entrywise(m: MatrixGF, e: int) -> MatrixGF:
    return MatrixGF(m.field, m.field.frob(m.data, e))


def batch_rank(field: FieldSpec, stack: np.ndarray) -> np.ndarray:
    """Ranks of every matrix in a ``(B, r, c)`` stack, eliminated in lockstep."""
    a = np.array(stack, dtype=np.int64)
    b, r, c = a.shape
    ranks = np.zeros(b, dtype=np.int64)
    if b == 0 or r == 0 or c == 0:
        return ranks
    idx = np.arange(b)
    rows = np.arange(r)
    for col in range(c):
        eligible = (rows[None, :] >= ranks[:, None]) & (a[:, :, col] != 0)
        has = eligible.any(axis=1) & (ranks < r)
        if not has.any():
            continue
        sel = idx[has]
        piv = eligible[sel].argmax(axis=1)
        tgt = ranks[sel]
        prow = a[sel, piv].copy()
        a[sel, piv] = a[sel, tgt]
        prow = field.mul(field.inv(prow[:, col])[:, None], prow)
        a[sel, tgt] = prow
        factors = a[sel, :, col].copy()
        factors[np.arange(sel.size), tgt] = 0
        a[sel] = field.sub(a[sel], field.mul(factors[:, :, None], prow[:, None, :]))
        ranks[sel] += 1
    return ranks


def _as_codes(field: FieldSpec, values) -> np.ndarray:
    return np.asarray([field.scalar(v) for v in values], dtype=np.int64)


def scaled_product(
    a: MatrixGF,
    lam,
    sigma,
    b: MatrixGF,
    method: str = "direct",
) -> MatrixGF:
    """``A @ I_lam @ P_sigma @ B``.

    ``P_sigma`` is the row-action permutation matrix with ``P[i, sigma[i]] = 1``.
    ``method="update"`` starts from ``A @ B`` and applies the rank-one
    corrections for each transposition of ``sigma`` and for each scaling
    entry different from one; it must agree exactly with ``method="direct"``.
    """
    field = a.field
    field.check_same(b.field)
    n = a.cols
    lam = _as_codes(field, lam)
    sigma = np.asarray(sigma, dtype=np.int64)
    if b.rows != n or lam.shape != (n,) or sigma.shape != (n,):
        raise DimensionMismatch(f"A {a.shape}, lambda {lam.shape}, sigma {sigma.shape}, B {b.shape}")
    if np.any(lam == 0):
        raise ZeroScalingEntry("scaling vector has a zero entry")
    if sorted(sigma.tolist()) != list(range(n)):
        raise DimensionMismatch("sigma is not a permutation")
    A, B = a.data, b.data
    if method == "direct":
        pb = B[sigma]  # row i of P_sigma B is row sigma[i] of B
        return MatrixGF(field, field.matmul(field.mul(A, lam[None, :]), pb))
    if method != "update":
        raise ValueError(method)
    # P_sigma = P_t1 P_t2 ... P_tm; A P_t1 (P_rest B) = A (P_rest B) + outer update
    ts = transpositions(sigma)
    out = field.matmul(A, B)
    tail = B.copy()
    for i, j in reversed(ts):
        # here out = A @ tail; prepend P_(i j)
        out = field.add(out, field.mul(field.sub(A[:, j], A[:, i])[:, None], field.sub(tail[i], tail[j])[None, :]))
        tail[[i, j]] = tail[[j, i]]
    for i in np.flatnonzero(lam != 1):
        out = field.add(out, field.mul(field.mul(field.sub(lam[i], 1), A[:, i])[:, None], tail[i][None, :]))
    return MatrixGF(field, out)


def transpositions(sigma) -> list[tuple[int, int]]:
    """Transpositions ``t1..tm`` with ``P_sigma = P_t1 @ ... @ P_tm``."""
    sigma = [int(s) for s in sigma]
    # swapping rows of B in the order found below turns B into P_sigma B,
    # so the first swap found is the rightmost factor
    cur = list(range(len(sigma)))
    ts = []
    for i in range(len(sigma)):
        if cur[i] != sigma[i]:
            j = cur.index(sigma[i])
            ts.append((i, j))
            cur[i], cur[j] = cur[j], cur[i]
    return ts[::-1]
