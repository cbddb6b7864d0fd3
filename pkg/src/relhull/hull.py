"""Relative hull dimensions and the monomial maps that move them.

The relative hull of ``C1`` with respect to ``C2`` is ``C1 ∩ C2^⊥``; its
dimension is ``k1 - rank(G2 G1^T)``.  With an e-Galois inner product the
dual of ``C2`` is the Euclidean dual of its Frobenius image, so every
routine here takes ``e`` and works with ``frob(G2, e) @ G1.T``.

Reductions change ``C2`` only, one coordinate scaling or one transposition
at a time, and record the maps so a trace can be replayed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from relhull.codes import (
    ENUMERATION_BUDGET,
    LinearCode,
    MonomialMap,
    _compatible,
    apply_map,
    dual,
    find_full_weight_word,
    max_weight,
    schur,
)
from relhull.errors import (
    AlreadyAtLowerBound,
    ConditionUnsatisfiable,
    DimensionMismatch,
    IncreaseHypothesisNotWitnessed,
    IndexOutOfRange,
    NoWitnessFound,
    PreconditionViolated,
    TargetOutOfRange,
)
from relhull.field import FieldSpec
from relhull.matrix import MatrixGF, batch_rank, rank, rref_array

EXHAUSTIVE_PERMUTATION_N = 8
DEFAULT_PERMUTATION_TRIALS = 10**5
EXHAUSTIVE_DIAGONAL_LIMIT = 1 << 20


@dataclass(frozen=True)
class HullReport:
    n: int
    k1: int
    k2: int
    dim_hull: int
    lower_bound: int
    upper_bound: int
    rank_product: int
    galois_e: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k1": self.k1,
            "k2": self.k2,
            "dim_hull": self.dim_hull,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "rank_product": self.rank_product,
            "galois_e": self.galois_e,
        }


@dataclass(frozen=True)
class ReductionStep:
    map: MonomialMap
    kind: str  # "scaling", "transposition" or "increase"
    coordinates: tuple[int, ...]
    scalar: int | None
    hull_dim_after: int

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "coordinates": list(self.coordinates),
            "scalar": self.scalar,
            "hull_dim_after": self.hull_dim_after,
        }
        if self.kind == "increase":
            out["map"] = self.map.to_json()
        return out


@dataclass
class ReductionTrace:
    initial: LinearCode
    final: LinearCode
    initial_dim: int
    steps: list[ReductionStep] = dc_field(default_factory=list)
    galois_e: int = 0

    @property
    def dims(self) -> list[int]:
        return [self.initial_dim] + [s.hull_dim_after for s in self.steps]

    def composite(self) -> MonomialMap:
        m = MonomialMap.identity(self.initial.field, self.initial.n)
        for s in self.steps:
            m = m.then(s.map)
        return m

    def to_json(self) -> dict:
        return {
            "galois_e": self.galois_e,
            "initial_dim": self.initial_dim,
            "final_dim": self.dims[-1],
            "steps": [s.to_json() for s in self.steps],
            "composite": self.composite().to_json(),
        }


def _product(c1: LinearCode, g2: np.ndarray, e: int) -> np.ndarray:
    f = c1.field
    return f.matmul(f.frob(g2, e), c1.gen.data.T).reshape(g2.shape[0], c1.k)


def _rank(field: FieldSpec, a: np.ndarray) -> int:
    return len(rref_array(field, a)[1])


def hull_dim(c1: LinearCode, c2: LinearCode, e: int = 0) -> HullReport:
    """Dimension of ``C1 ∩ C2^{⊥_e}`` with the equivalence bounds."""
    _compatible(c1, c2)
    c1.field.check_frobenius_exponent(e)
    r = _rank(c1.field, _product(c1, c2.gen.data, e))
    return HullReport(
        n=c1.n,
        k1=c1.k,
        k2=c2.k,
        dim_hull=c1.k - r,
        lower_bound=max(0, c1.k - c2.k),
        upper_bound=min(c1.k, c1.n - c2.k),
        rank_product=r,
        galois_e=e,
    )


def _step_from_map(m: MonomialMap, dim_after: int) -> ReductionStep:
    moved = [i for i, s in enumerate(m.sigma) if s != i]
    if moved:
        return ReductionStep(m, "transposition", tuple(moved), None, dim_after)
    j = next(i for i, x in enumerate(m.lam) if x != 1)
    return ReductionStep(m, "scaling", (j,), m.lam[j], dim_after)


def _first_rank_bump(field: FieldSpec, base: np.ndarray, updates: np.ndarray, target: int) -> int | None:
    if updates.shape[0] == 0:
        return None
    ranks = batch_rank(field, field.add(base[None, :, :], updates))
    hits = np.flatnonzero(ranks == target)
    return int(hits[0]) if hits.size else None


def _find_witness(c1: LinearCode, g2: np.ndarray, e: int, base_rank: int) -> MonomialMap | None:
    """Scalings by coordinate then value, then transpositions in lex order."""
    f = c1.field
    n = c1.n
    a = f.frob(g2, e)  # k2 x n
    b = c1.gen.data.T  # n x k1
    base = f.matmul(a, b).reshape(a.shape[0], b.shape[1])
    values = np.arange(2, f.q, dtype=np.int64)
    if values.size:
        js = np.repeat(np.arange(n), values.size)
        vs = np.tile(values, n)
        mu1 = f.sub(f.frob(vs, e), 1)
        cols = f.mul(mu1[:, None], a[:, js].T)  # (N, k2)
        updates = f.mul(cols[:, :, None], b[js][:, None, :])
        hit = _first_rank_bump(f, base, updates, base_rank + 1)
        if hit is not None:
            return MonomialMap.single_scaling(f, n, int(js[hit]), int(vs[hit]))
    pairs = np.array(list(itertools.combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
    if pairs.size:
        i, j = pairs[:, 0], pairs[:, 1]
        left = f.sub(a[:, j].T, a[:, i].T)  # (N, k2)
        right = f.sub(b[i], b[j])  # (N, k1)
        updates = f.mul(left[:, :, None], right[:, None, :])
        hit = _first_rank_bump(f, base, updates, base_rank + 1)
        if hit is not None:
            return MonomialMap.transposition(f, n, int(i[hit]), int(j[hit]))
    return None


def reduce_step(c1: LinearCode, c2: LinearCode, e: int = 0) -> tuple[LinearCode, MonomialMap]:
    """An equivalent ``C2'`` whose (e-Galois) relative hull is one smaller."""
    rep = hull_dim(c1, c2, e)
    if rep.dim_hull <= rep.lower_bound:
        raise AlreadyAtLowerBound(f"hull dimension {rep.dim_hull} is already max(0, k1 - k2)")
    m = _find_witness(c1, c2.gen.data, e, rep.rank_product)
    if m is None:
        raise NoWitnessFound(
            f"no single scaling or transposition lowers the hull over GF({c1.q})"
        )
    c2_new = apply_map(c2, m)
    after = hull_dim(c1, c2_new, e).dim_hull
    if after != rep.dim_hull - 1:  # pragma: no cover - guarded by the rank test
        raise RuntimeError("witness did not lower the hull by one")
    return c2_new, m


def reduce_to(c1: LinearCode, c2: LinearCode, target: int, e: int = 0) -> ReductionTrace:
    """Lower the hull dimension to ``target`` one step at a time."""
    rep = hull_dim(c1, c2, e)
    if not rep.lower_bound <= target <= rep.dim_hull:
        raise TargetOutOfRange(
            f"target {target} outside [{rep.lower_bound}, {rep.dim_hull}]"
        )
    trace = ReductionTrace(initial=c2, final=c2, initial_dim=rep.dim_hull, galois_e=e)
    cur, dim = c2, rep.dim_hull
    while dim > target:
        cur, m = reduce_step(c1, cur, e)
        dim -= 1
        trace.steps.append(_step_from_map(m, dim))
    trace.final = cur
    return trace


def egal_hull_reduce_step(c: LinearCode, e: int) -> tuple[tuple[int, ...], LinearCode]:
    """Scaling ``lam`` with ``dim hull^e(lam ⋆ C) = dim hull^e(C) - 1``.

    Scaling coordinate j by x multiplies the j-th term of ``G (G^{p^e})^T``
    by ``x^{p^e+1}``, so only values with ``x^{p^e+1} != 1`` can help.
    """
    f = c.field
    f.check_frobenius_exponent(e)
    units = f.units()
    expo = f.p**e + 1
    useful = units[f.power(units, expo) != 1]
    if useful.size == 0:
        raise ConditionUnsatisfiable(
            f"every unit x of GF({f.q}) has x^{expo} = 1; no scaling can change the hull"
        )
    g = c.gen.data
    gf_ = f.frob(g, e)
    base = f.matmul(g, gf_.T).reshape(c.k, c.k)
    r = _rank(f, base)
    if c.k - r == 0:
        raise AlreadyAtLowerBound("the e-Galois hull is already zero")
    js = np.repeat(np.arange(c.n), useful.size)
    xs = np.tile(useful, c.n)
    mu1 = f.sub(f.power(xs, expo), 1)
    left = f.mul(mu1[:, None], g[:, js].T)
    updates = f.mul(left[:, :, None], gf_[:, js].T[:, None, :])
    hit = _first_rank_bump(f, base, updates, r + 1)
    if hit is None:
        raise NoWitnessFound("no single-coordinate scaling lowers the e-Galois hull")
    lam = [1] * c.n
    lam[int(js[hit])] = int(xs[hit])
    out = apply_map(c, MonomialMap.scaling(f, lam))
    return tuple(lam), out


def _schur_dual_word(c1: LinearCode, c2s: LinearCode, cache: dict, budget: int) -> np.ndarray | None:
    s = schur(c1, c2s)
    key = s.gen.data.tobytes()
    if key not in cache:
        cache[key] = find_full_weight_word(dual(s), budget)
    return cache[key]


def increase_to_full(
    c1: LinearCode,
    c2: LinearCode,
    *,
    seed: int = 0,
    max_trials: int = DEFAULT_PERMUTATION_TRIALS,
    budget: int = ENUMERATION_BUDGET,
) -> tuple[LinearCode, MonomialMap] | None:
    """Look for ``sigma`` and a full-weight ``lam ∈ (C1 ⋆ C2^sigma)^⊥``.

    On success ``lam ⋆ C2^sigma`` contains ``C1`` in its dual, so the hull is
    all of ``C1``.  ``None`` only means the search ran out.
    """
    _compatible(c1, c2)
    n = c1.n
    if c1.k + c2.k >= n:
        raise PreconditionViolated(f"needs k1 + k2 < n, got {c1.k} + {c2.k} >= {n}")
    f = c1.field
    if n <= EXHAUSTIVE_PERMUTATION_N:
        perms = itertools.permutations(range(n))
    else:
        rng = np.random.default_rng(seed)
        perms = (tuple(rng.permutation(n).tolist()) for _ in range(max_trials))
    cache: dict = {}
    for sigma in perms:
        pmap = MonomialMap.permutation(f, sigma)
        lam = _schur_dual_word(c1, apply_map(c2, pmap), cache, budget)
        if lam is None:
            continue
        m = pmap.then(MonomialMap.scaling(f, lam.tolist()))
        c2_new = apply_map(c2, m)
        if f.matmul(c1.gen.data, c2_new.gen.data.T).any():  # pragma: no cover
            raise RuntimeError("full-weight Schur-dual word did not orthogonalise the codes")
        return c2_new, m
    return None


def set_hull_dim(
    c1: LinearCode,
    c2: LinearCode,
    target: int,
    *,
    seed: int = 0,
    max_trials: int = DEFAULT_PERMUTATION_TRIALS,
    budget: int = ENUMERATION_BUDGET,
) -> ReductionTrace:
    """Move the Euclidean relative hull dimension to ``target``."""
    rep = hull_dim(c1, c2)
    if not rep.lower_bound <= target <= c1.k:
        raise TargetOutOfRange(f"target {target} outside [{rep.lower_bound}, {c1.k}]")
    if target <= rep.dim_hull:
        return reduce_to(c1, c2, target)
    found = increase_to_full(c1, c2, seed=seed, max_trials=max_trials, budget=budget)
    if found is None:
        raise IncreaseHypothesisNotWitnessed(
            "no permutation with a full-weight word in the Schur-product dual was found"
        )
    c2_full, m = found
    tail = reduce_to(c1, c2_full, target)
    moved = tuple(i for i, s in enumerate(m.sigma) if s != i)
    steps = [ReductionStep(m, "increase", moved, None, c1.k)] + tail.steps
    return ReductionTrace(initial=c2, final=tail.final, initial_dim=rep.dim_hull, steps=steps)


@dataclass(frozen=True)
class DiagonalMax:
    achieved: int
    bound_maxwt: int
    bound_anticode: int
    exact: bool
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "achieved": self.achieved,
            "bound_maxwt": self.bound_maxwt,
            "bound_anticode": self.bound_anticode,
            "exact": self.exact,
            "witness": list(self.witness),
        }


def _diagonal_ranks(field: FieldSpec, a: np.ndarray, b: np.ndarray, lams: np.ndarray) -> np.ndarray:
    prods = field.matmul(field.mul(a[None, :, :], lams[:, None, :]), b)
    return batch_rank(field, prods)


def diagonal_hull_max(
    c1: LinearCode,
    c2: LinearCode,
    *,
    exhaustive_limit: int = EXHAUSTIVE_DIAGONAL_LIMIT,
    samples: int = 10**4,
    seed: int = 0,
    chunk: int = 4096,
) -> DiagonalMax:
    """Largest ``dim hull_{C2}(C1 I_lam)`` over scalings, with the two lower bounds.

    Exhaustive when ``(q-1)^n <= exhaustive_limit`` (the first entry of
    ``lam`` is fixed to one since overall scalars do not change ranks),
    otherwise a seeded sample and ``exact=False``.
    """
    _compatible(c1, c2)
    if c1.k > c2.k:
        raise PreconditionViolated(f"needs k1 <= k2, got {c1.k} > {c2.k}")
    f, n = c1.field, c1.n
    sd = dual(schur(c1, c2))
    bound_maxwt = max_weight(sd) - n + c1.k
    # dim(sd) <= maxwt(sd) turns the maxwt bound into k1 - dim(C1 ⋆ C2)
    bound_anticode = c1.k - (n - sd.k)
    a, b = c2.gen.data, c1.gen.data.T
    units = f.units()
    u = units.size
    exact = u**n <= exhaustive_limit
    best_rank, best_lam = c1.k + 1, None
    if exact:
        total = u ** (n - 1)
        radix = u ** np.arange(n - 1, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            lams = np.ones((idx.size, n), dtype=np.int64)
            lams[:, 1:] = units[(idx[:, None] // radix[None, :]) % u]
            ranks = _diagonal_ranks(f, a, b, lams)
            i = int(ranks.argmin())
            if ranks[i] < best_rank:
                best_rank, best_lam = int(ranks[i]), lams[i]
            if best_rank == 0:
                break
    else:
        rng = np.random.default_rng(seed)
        for start in range(0, samples, chunk):
            lams = f.random((min(chunk, samples - start), n), rng, nonzero=True)
            ranks = _diagonal_ranks(f, a, b, lams)
            i = int(ranks.argmin())
            if ranks[i] < best_rank:
                best_rank, best_lam = int(ranks[i]), lams[i]
    achieved = c1.k - best_rank
    if exact and not achieved >= bound_maxwt >= bound_anticode:  # pragma: no cover
        raise RuntimeError(f"bound chain broken: {achieved}, {bound_maxwt}, {bound_anticode}")
    return DiagonalMax(achieved, bound_maxwt, bound_anticode, exact, tuple(int(x) for x in best_lam))


@dataclass(frozen=True)
class Augmentation:
    c1: LinearCode
    c2: LinearCode
    predicted: bool
    increased: bool
    r: int
    dim_before: int
    dim_after: int


def normalize_product(c1: LinearCode, c2: LinearCode) -> tuple[np.ndarray, np.ndarray, int]:
    """Generators ``U G1``, ``V G2`` of the same codes with
    ``(U G1)(V G2)^T = diag(0, I_r)``."""
    f = c1.field
    k = c1.k
    eye = np.eye(k, dtype=np.int64)
    p = f.matmul(c1.gen.data, c2.gen.data.T).reshape(k, k)
    red, piv = rref_array(f, np.hstack([p, eye]), ncols=k)
    u0, rr = red[:, k:], red[:, :k]
    red_t, _ = rref_array(f, np.hstack([rr.T, eye]), ncols=k)
    w0 = red_t[:, k:].T
    rev = eye[::-1]
    u = f.matmul(rev, u0)
    v = f.matmul(rev, w0.T)
    g1 = f.matmul(u, c1.gen.data)
    g2 = f.matmul(v, c2.gen.data)
    r = len(piv)
    want = np.zeros((k, k), dtype=np.int64)
    want[k - r :, k - r :] = np.eye(r, dtype=np.int64)
    if not np.array_equal(f.matmul(g1, g2.T).reshape(k, k), want):  # pragma: no cover
        raise RuntimeError("normal form computation failed")
    return g1, g2, r


def augment_length(c1: LinearCode, c2: LinearCode, i: int, j: int) -> Augmentation:
    """Append ``e_i`` to the generator of C1 and ``-e_j`` to that of C2.

    Indices are 0-based rows of the normalised generators; the hull grows
    exactly when ``i == j >= k - r``.
    """
    _compatible(c1, c2)
    if c1.k != c2.k:
        raise DimensionMismatch(f"needs k1 == k2, got {c1.k} and {c2.k}")
    k = c1.k
    if not (0 <= i < k and 0 <= j < k):
        raise IndexOutOfRange(f"indices ({i}, {j}) outside [0, {k})")
    f = c1.field
    g1, g2, r = normalize_product(c1, c2)
    col1 = np.zeros((k, 1), dtype=np.int64)
    col2 = np.zeros((k, 1), dtype=np.int64)
    col1[i, 0] = 1
    col2[j, 0] = f.neg(1)
    h1 = LinearCode(f, c1.n + 1, np.hstack([g1, col1]))
    h2 = LinearCode(f, c1.n + 1, np.hstack([g2, col2]))
    before = k - r
    after = hull_dim(h1, h2).dim_hull
    predicted = i == j and i >= k - r
    increased = after > before
    if predicted != increased:  # pragma: no cover
        raise RuntimeError(f"augmentation at ({i}, {j}) disagrees with the predicate")
    return Augmentation(h1, h2, predicted, increased, r, before, after)


def product_rank(g2: MatrixGF, lam, sigma, g1: MatrixGF) -> int:
    """``rank(G2 I_lam P_sigma G1^T)``."""
    from relhull.matrix import scaled_product

    return rank(scaled_product(g2, lam, sigma, g1.T))
