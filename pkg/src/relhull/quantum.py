"""Entanglement-assisted quantum code parameters from classical codes.

Distances are exact: every ``δ`` comes from enumerating set differences of
codes, so all routines here respect the enumeration budget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from relhull.cartesian import (
    CartesianGrid,
    ExponentSet,
    eval_code,
    footprint_bound,
    grlex_key,
    hyperbolic,
    hyperbolic_dual,
    is_decreasing,
)
from relhull.codes import (
    ENUMERATION_BUDGET,
    LinearCode,
    MonomialMap,
    _compatible,
    apply_map,
    code_sum,
    dual,
    galois_image,
    intersection,
    min_distance,
    weight_of_difference,
)
from relhull.errors import (
    ConditionViolated,
    DegenerateDelta,
    DistanceTooSmall,
    EmptyDifference,
    NotDecreasing,
    NotPureInput,
    OddExtensionDegree,
    PreconditionViolated,
    PurityNotPreserved,
    SandwichViolated,
    TargetOutOfRange,
    WeightOneAmbiguity,
)
from relhull.hull import hull_dim, reduce_to


@dataclass(frozen=True)
class CSSParams:
    n: int
    kappa: int
    delta: int
    c: int
    q: int
    pure: bool

    @property
    def singleton_slack(self) -> int:
        return self.n + self.c + 2 - 2 * self.delta - self.kappa

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.kappa,
            "d": self.delta,
            "c": self.c,
            "q": self.q,
            "pure": self.pure,
            "singleton_slack": self.singleton_slack,
        }

    def __str__(self):
        return f"[[{self.n},{self.kappa},{self.delta};{self.c}]]_{self.q}"


def _distance(c: LinearCode, budget: int) -> int | None:
    return min_distance(c, budget) if c.k else None


def css(c1: LinearCode, c2: LinearCode, budget: int = ENUMERATION_BUDGET) -> CSSParams:
    """``[[n, κ, δ; c]]_q`` of the CSS construction from ``C1`` and ``C2``."""
    _compatible(c1, c2)
    n = c1.n
    c = hull_dim(c1, c2).rank_product
    kappa = n - c1.k - c2.k + c
    d1p, d2p = dual(c1), dual(c2)
    w1 = weight_of_difference(d1p, c2, budget)
    w2 = weight_of_difference(d2p, c1, budget)
    if w1 is None and w2 is None:
        raise DegenerateDelta(n, kappa, c)
    delta = min(w for w in (w1, w2) if w is not None)
    dists = [d for d in (_distance(d1p, budget), _distance(d2p, budget)) if d is not None]
    return CSSParams(n, kappa, delta, c, c1.q, delta == min(dists))


def css_with_target_c(
    c1: LinearCode, c2: LinearCode, c_target: int, budget: int = ENUMERATION_BUDGET
) -> tuple[LinearCode, CSSParams]:
    """Replace ``C2`` by an equivalent code so that exactly ``c_target`` pairs are used."""
    rep = hull_dim(c1, c2)
    lo, hi = rep.rank_product, c1.k - rep.lower_bound
    if not lo <= c_target <= hi:
        raise TargetOutOfRange(f"c = {c_target} outside [{lo}, {hi}]")
    trace = reduce_to(c1, c2, c1.k - c_target)
    return trace.final, css(c1, trace.final, budget)


def hermitian(c: LinearCode, budget: int = ENUMERATION_BUDGET) -> CSSParams:
    """Hermitian construction over GF(q^2); the record carries ``q``."""
    f = c.field
    if f.l % 2:
        raise OddExtensionDegree(f"GF({f.q}) is not a quadratic extension")
    e = f.l // 2
    h = hull_dim(c, c, e).dim_hull
    cc = c.k - h
    kappa = c.n - 2 * c.k + cc
    hdual = dual(galois_image(c, e))
    w = weight_of_difference(hdual, intersection(c, hdual), budget)
    if w is None:
        raise DegenerateDelta(c.n, kappa, cc)
    return CSSParams(c.n, kappa, w, cc, f.p**e, w == min_distance(hdual, budget))


def _dist_or_inf(c: LinearCode, budget: int) -> float:
    return min_distance(c, budget) if c.k else float("inf")


def purity_robust(c1: LinearCode, c2: LinearCode, budget: int = ENUMERATION_BUDGET) -> bool:
    """Whether a pure CSS pair stays pure, with the same δ, under every
    equivalence applied to ``C2``.  Distances of zero codes count as infinite."""
    if not css(c1, c2, budget).pure:
        raise NotPureInput("the CSS code from these codes is not pure")
    d1, d2 = _dist_or_inf(c1, budget), _dist_or_inf(c2, budget)
    d1p, d2p = _dist_or_inf(dual(c1), budget), _dist_or_inf(dual(c2), budget)
    cond1 = d1p < min(d2, d2p)
    cond2 = d1p == d2p and d1p < min(d1, d2)
    return cond1 or cond2


def _hyperbolic_code(d: int, grid: CartesianGrid) -> LinearCode:
    """``C_{H_d}``, with ``H_d`` empty beyond ``d = n``."""
    if d > grid.n:
        return eval_code(ExponentSet(grid.m, frozenset()), grid, allow_empty=True)
    return eval_code(hyperbolic(d, grid), grid, allow_empty=True)


def sandwich_pure(
    c1: LinearCode,
    grid: CartesianGrid,
    c2: LinearCode | None = None,
    *,
    samples: int = 0,
    seed: int = 0,
    budget: int = ENUMERATION_BUDGET,
) -> tuple[LinearCode, CSSParams]:
    """Pick (or validate) ``C2`` with ``(C_{H_{d+1}})^⊥ ⊆ C2 ⊆ C_{H_d}``.

    ``d`` is the minimum distance of ``C1^⊥``; the default is the upper end.
    With ``samples > 0`` the reported purity and δ are re-checked against
    that many seeded random equivalences of ``C2``.
    """
    if c1.n != grid.n:
        raise PreconditionViolated(f"code length {c1.n} vs {grid.n} grid points")
    d = min_distance(dual(c1), budget)
    upper = _hyperbolic_code(d, grid)
    lower = dual(_hyperbolic_code(d + 1, grid))
    if c2 is None:
        if not lower.issubcode(upper):
            raise SandwichViolated(f"no code fits between the dual of C_H{d + 1} and C_H{d}")
        c2 = upper
    if not lower.issubcode(c2):
        raise SandwichViolated(f"C2 does not contain the dual of C_H{d + 1}")
    if not c2.issubcode(upper):
        raise SandwichViolated(f"C2 is not contained in C_H{d}")
    params = css(c1, c2, budget)
    if samples:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            other = css(c1, apply_map(c2, MonomialMap.random(c2.field, c2.n, rng)), budget)
            if (other.pure, other.delta) != (params.pure, params.delta):
                raise PurityNotPreserved(f"{params} became {other} under an equivalence")
    return c2, params


def _priorities(m: int, order):
    if order is None:
        return list(itertools.permutations(range(m)))
    return [tuple(order)]


def impure_pair(
    M1: ExponentSet,
    M2: ExponentSet,
    grid: CartesianGrid,
    order=None,
    budget: int = ENUMERATION_BUDGET,
) -> CSSParams:
    """CSS parameters of ``C1 = (C_{M1})^⊥``, ``C2 = C_{M2}`` after checking
    the three monomial conditions that force impurity.

    ``order`` lists variables from largest for the graded lex order used by
    the ordering condition; by default every variable order is tried.
    """
    if not is_decreasing(M1):
        raise NotDecreasing("M1 is not decreasing")
    d = footprint_bound(M1, grid)
    hd1_dual = hyperbolic_dual(d + 1, grid) if d < grid.n else ExponentSet(grid.m, frozenset(grid.box()))
    hd1 = hyperbolic(d + 1, grid) if d < grid.n else ExponentSet(grid.m, frozenset())
    if not hd1_dual <= M2:
        raise ConditionViolated(1, "H_{d+1}^⊥ is not contained in M2")
    diff, common = M1 - M2, M1 & M2
    if len(diff) == 0 or not diff <= hd1:
        raise ConditionViolated(2, "M1 \\ M2 is empty or not inside H_{d+1}")
    if not any(
        all(grlex_key(u, pr) < grlex_key(v, pr) for u in common for v in diff) for pr in _priorities(grid.m, order)
    ):
        raise ConditionViolated(3, "some monomial of M1 ∩ M2 is not below all of M1 \\ M2")
    cm1 = eval_code(M1, grid)
    c2 = eval_code(M2, grid)
    if cm1.issubcode(c2):
        raise EmptyDifference("C1^⊥ \\ C2 is empty")
    params = css(dual(cm1), c2, budget)
    if params.pure:  # pragma: no cover - the conditions force impurity
        raise RuntimeError(f"{params} came out pure")
    return params


def impure_family(M1: ExponentSet, M2: ExponentSet, q: int, m: int, budget: int = ENUMERATION_BUDGET) -> CSSParams:
    """``[[q^m, |M2| - |M1|]]_q`` impure code from ``D1 = C_{M1 - {1}}`` and
    ``D2 = C_{M2}^⊥ + <e_0>`` on the full grid."""
    from relhull.field import gf

    grid = CartesianGrid.full(gf(q), m)
    for name, M in (("M1", M1), ("M2", M2)):
        if not is_decreasing(M):
            raise NotDecreasing(f"{name} is not decreasing")
    if not M1 <= M2:
        raise PreconditionViolated("M1 is not contained in M2")
    for name, M in (("M1", M1), ("M2", M2)):
        if footprint_bound(M, grid) <= 2:
            raise DistanceTooSmall(f"C_{name} has minimum distance at most 2")
    one = ExponentSet(m, frozenset({(0,) * m}))
    d1 = eval_code(M1 - one, grid, allow_empty=True)
    # e_P lies in D1^⊥ exactly when every monomial of M1 - {1} vanishes at P
    if d1.k == 0 or np.any(~d1.gen.data[:, 1:].any(axis=0)):
        raise WeightOneAmbiguity("some e_P with P != 0 has weight one in D1^⊥")
    e0 = np.zeros((1, grid.n), dtype=np.int64)
    e0[0, 0] = 1
    d2 = code_sum(dual(eval_code(M2, grid)), LinearCode(grid.field, grid.n, e0))
    if d2.k and grid.field.matmul(d1.gen.data, d2.gen.data.T).any():  # pragma: no cover
        raise RuntimeError("D1 is not contained in the dual of D2")
    params = css(d1, d2, budget)
    if params.pure or min_distance(dual(d1), budget) != 1:  # pragma: no cover
        raise RuntimeError(f"{params} is not impure with d(D1^⊥) = 1")
    return params
