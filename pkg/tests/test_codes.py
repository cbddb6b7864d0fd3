from __future__ import annotations

import itertools

import numpy as np
import pytest

from relhull import catalog
from relhull.cartesian import CartesianGrid, ExponentSet, eval_code
from relhull.codes import (
    LinearCode,
    MonomialMap,
    apply_map,
    code_from_rows,
    code_sum,
    codewords,
    dual,
    find_full_weight_word,
    full_space,
    galois_image,
    hull,
    intersection,
    max_weight,
    min_distance,
    random_code,
    relative_hull,
    schur,
    weight_enumerator,
    weight_of_difference,
    zero_code,
)
from relhull.errors import EmptyGenerator, EnumerationTooLarge, LengthMismatch, MixedFields, UndefinedDistance
from relhull.field import gf
from relhull.hull import hull_dim


def words(c: LinearCode) -> set[tuple[int, ...]]:
    """Brute-force span of the generator rows."""
    f = c.field
    out = set()
    for coeffs in itertools.product(range(f.q), repeat=c.k):
        w = f.matmul(np.array(coeffs, dtype=np.int64).reshape(1, -1), c.gen.data).reshape(-1) if c.k else np.zeros(c.n, dtype=np.int64)
        out.add(tuple(int(x) for x in w))
    return out


def brute_dual(c: LinearCode) -> set[tuple[int, ...]]:
    f = c.field
    gens = c.gen.data
    return {v for v in itertools.product(range(f.q), repeat=c.n) if not f.matmul(gens, np.array(v)).any()}


def test_code_from_rows_basic():
    f = gf(3)
    c = code_from_rows(f, [[1, 1, 1]])
    assert (c.n, c.k) == (3, 1)
    assert code_from_rows(f, [[1, 1, 1], [2, 2, 2]]).k == 1
    with pytest.raises(EmptyGenerator):
        code_from_rows(f, [])


def test_code_from_rows_gf9_g1():
    f = gf(9)
    c = code_from_rows(f, catalog.matrix(f, catalog.F9_EX1_G1))
    assert (c.n, c.k, c.q) == (7, 4, 9)


def test_mixed_fields_rejected():
    from relhull.matrix import MatrixGF

    with pytest.raises(MixedFields):
        code_from_rows(gf(3), MatrixGF(gf(5), [[1, 2]]))
    with pytest.raises(MixedFields):
        relative_hull(full_space(gf(3), 2), full_space(gf(5), 2))


def test_dual_examples():
    f = gf(3)
    assert dual(full_space(f, 3)).k == 0
    d = dual(code_from_rows(f, [[1, 1, 1]]))
    assert d.k == 2
    assert d.contains([[1, 2, 0]]).all()
    assert words(d) == brute_dual(code_from_rows(f, [[1, 1, 1]]))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_dual_matches_brute_force(q, rng):
    f = gf(q)
    for _ in range(15):
        n = int(rng.integers(1, 6 if q <= 3 else 5))
        c = random_code(f, n, int(rng.integers(0, n + 1)), rng)
        d = dual(c)
        assert d.k == n - c.k
        assert dual(d) == c
        assert words(d) == brute_dual(c)


def test_relative_hull_examples():
    f = gf(3)
    e1 = code_from_rows(f, [[1, 0]])
    assert relative_hull(e1, e1).k == 0
    c = code_from_rows(f, [[1, 1, 1]])
    assert relative_hull(c, c) == c
    g = gf(9)
    c1, c2, m1, _ = catalog.f9_pair(catalog.F9_EX1_G1, catalog.F9_EX1_G2)
    h = relative_hull(c1, c2)
    assert h == code_from_rows(g, m1.data[:3])


@pytest.mark.parametrize("q", [3, 4, 5])
def test_relative_hull_matches_intersection(q, rng):
    f = gf(q)
    for _ in range(40):
        n = int(rng.integers(2, 9 if q == 3 else 7))
        c1 = random_code(f, n, int(rng.integers(1, min(4, n) + 1)), rng)
        c2 = random_code(f, n, int(rng.integers(1, min(4, n) + 1)), rng)
        h = relative_hull(c1, c2)
        assert h == intersection(c1, dual(c2))
        assert h.k == hull_dim(c1, c2).dim_hull
        if q ** max(c1.k, n - c2.k) <= 3**8:
            assert words(h) == words(c1) & words(dual(c2))
        # remark: hull_{C1}(C2) lies in the dual of hull_{C2}(C1)
        assert relative_hull(c2, c1).issubcode(dual(h))
        assert c1.k - h.k == c2.k - relative_hull(c2, c1).k


def test_hull_is_self_orthogonal(rng):
    for q in (3, 4, 5, 9):
        f = gf(q)
        for _ in range(20):
            c = random_code(f, 6, int(rng.integers(1, 4)), rng)
            h = hull(c)
            assert h == relative_hull(c, c)
            assert h.issubcode(dual(h))


def test_schur_examples():
    f = gf(5)
    for beta in range(1, 5):
        c = code_from_rows(f, [[1, 0, 0], [0, 1, beta]])
        assert schur(c, c) == code_from_rows(f, [[1, 0, 0], [0, 1, int(f.mul(beta, beta))]])
    ones = code_from_rows(f, [[1, 1, 1]])
    assert schur(c, ones) == c


@pytest.mark.parametrize("q", [3, 4, 5])
def test_schur_duals_over_all_permutations(q):
    # every (C1 * C2^sigma)^⊥ is a permuted copy of D = <(0, 1, 0, -1)>;
    # only <(1, 0, -1, 0)> and D itself actually occur
    f = gf(q)
    c1 = code_from_rows(f, catalog.NONINC_G1)
    c2 = code_from_rows(f, catalog.NONINC_G2)
    d = code_from_rows(f, [[0, 1, 0, -1]])
    perms = list(itertools.permutations(range(4)))
    lhs = set().union(*(words(dual(schur(c1, apply_map(c2, MonomialMap.permutation(f, s))))) for s in perms))
    rhs = set().union(*(words(apply_map(d, MonomialMap.permutation(f, s))) for s in perms))
    assert lhs <= rhs
    assert words(d) <= lhs and lhs < rhs
    assert max(sum(1 for x in w if x) for w in lhs) == 2


def test_distance_and_weights():
    f = gf(3)
    c = code_from_rows(f, [[1, 1, 1]])
    assert min_distance(c) == 3
    assert max_weight(c) == 3
    z = zero_code(f, 4)
    assert max_weight(z) == 0
    with pytest.raises(UndefinedDistance):
        min_distance(z)


def test_enumeration_budget():
    c = full_space(gf(5), 12)
    with pytest.raises(EnumerationTooLarge):
        min_distance(c)
    with pytest.raises(EnumerationTooLarge):
        weight_enumerator(c, budget=1000)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_weight_enumerator_brute_force(q, rng):
    f = gf(q)
    for _ in range(10):
        c = random_code(f, 6, int(rng.integers(0, 5)), rng)
        counts = [0] * 7
        for w in words(c):
            counts[sum(1 for x in w if x)] += 1
        we = weight_enumerator(c).counts
        assert list(we) == counts
        assert sum(we) == q**c.k and we[0] == 1
        nz = [i for i, x in enumerate(counts) if x and i]
        if nz:
            assert min_distance(c) == nz[0] and max_weight(c) == nz[-1]


def test_codewords_enumerates_span():
    f = gf(4)
    c = code_from_rows(f, [[1, 2, 3, 0], [0, 1, 1, 1]])
    got = {tuple(w) for block in codewords(c) for w in block.tolist()}
    assert got == words(c)


def test_weight_of_difference():
    f = gf(3)
    c = code_from_rows(f, [[1, 1, 1]])
    assert weight_of_difference(c, c) is None
    assert weight_of_difference(full_space(f, 3), c) == 1


def test_f4_pair_distances():
    grid = CartesianGrid.full(gf(4), 2)
    cm1 = eval_code(ExponentSet.parse(catalog.F4_M1, 2), grid)
    c2 = eval_code(ExponentSet.parse(catalog.F4_M2, 2), grid)
    assert min_distance(cm1) == 4
    assert min_distance(dual(c2)) == 6
    assert weight_of_difference(cm1, c2) == 6


def test_weight_of_difference_brute_force(rng):
    f = gf(3)
    for _ in range(30):
        a = random_code(f, 5, int(rng.integers(1, 4)), rng)
        b = random_code(f, 5, int(rng.integers(0, 4)), rng)
        outside = words(a) - words(b)
        want = min((sum(1 for x in w if x) for w in outside), default=None)
        assert weight_of_difference(a, b) == want


def test_monomial_map_algebra(rng):
    for q in (3, 4, 5, 9):
        f = gf(q)
        for _ in range(20):
            n = int(rng.integers(1, 7))
            m1, m2 = MonomialMap.random(f, n, rng), MonomialMap.random(f, n, rng)
            w = f.random((3, n), rng)
            assert np.array_equal(m1.then(m2).apply(w), m2.apply(m1.apply(w)))
            assert m1.then(m2).matrix() == m1.matrix() @ m2.matrix()
            assert m1.then(m1.inverse()).is_identity()
            assert np.array_equal(m1.apply(w), f.matmul(w, m1.matrix().data))


def test_monomial_map_conventions():
    f = gf(5)
    m = MonomialMap(f, (2, 1, 1), (1, 2, 0))
    # coordinate 0 is scaled by 2 and lands at position 1
    assert m.apply([[1, 0, 0]]).tolist() == [[0, 2, 0]]
    assert m.matrix().tolist() == [[0, 2, 0], [0, 0, 1], [1, 0, 0]]
    with pytest.raises(LengthMismatch):
        apply_map(full_space(f, 2), m)


def test_apply_map_identity_and_inverse(rng):
    f = gf(4)
    for _ in range(20):
        c = random_code(f, 6, 3, rng)
        assert apply_map(c, MonomialMap.identity(f, 6)) == c
        m = MonomialMap.random(f, 6, rng)
        assert apply_map(apply_map(c, m), m.inverse()) == c


@pytest.mark.parametrize("q", [3, 4, 5, 9])
def test_apply_map_preserves_weight_enumerator(q, rng):
    f = gf(q)
    for _ in range(15):
        c = random_code(f, 7, int(rng.integers(1, 4)), rng)
        m = MonomialMap.random(f, 7, rng)
        assert weight_enumerator(apply_map(c, m)) == weight_enumerator(c)


@pytest.mark.parametrize("q", [3, 4, 9])
def test_dual_of_mapped_code(q, rng):
    # (C I_lam P)^⊥ = C^⊥ I_lam^{-1} P
    f = gf(q)
    for _ in range(20):
        c = random_code(f, 6, int(rng.integers(1, 5)), rng)
        m = MonomialMap.random(f, 6, rng)
        inv_scale = MonomialMap(f, tuple(f.inv(np.asarray(m.lam)).tolist()), m.sigma)
        assert dual(apply_map(c, m)) == apply_map(dual(c), inv_scale)


def test_transposition_changes_gf9_hull():
    c1, c2, _, _ = catalog.f9_pair(catalog.F9_EX3_G1, catalog.F9_EX3_G2)
    t = MonomialMap.transposition(c1.field, 6, 0, 4)
    assert hull_dim(c1, c2).dim_hull == 2
    assert hull_dim(c1, apply_map(c2, t)).dim_hull == 1


def test_galois_image():
    f = gf(4)
    w = f.primitive_element.code
    c = code_from_rows(f, [[1, w]])
    assert galois_image(c, 0) == c
    assert galois_image(c, 1) == code_from_rows(f, [[1, int(f.add(w, 1))]])


@pytest.mark.parametrize("q", [4, 8, 9])
def test_galois_dual_by_direct_summation(q, rng):
    f = gf(q)
    for _ in range(15):
        c = random_code(f, 5, int(rng.integers(1, 4)), rng)
        for e in range(f.l):
            d = dual(galois_image(c, e))
            # x ._e c = sum x_i c_i^(p^e) = 0 for every generator row c
            for x in d.gen.data:
                for row in c.gen.data:
                    assert int(f.sum(f.mul(x, f.frob(row, e)))) == 0
            assert d.k == c.n - c.k


def test_intersection_and_sum_dimensions(rng):
    f = gf(5)
    for _ in range(30):
        a = random_code(f, 6, int(rng.integers(0, 5)), rng)
        b = random_code(f, 6, int(rng.integers(0, 5)), rng)
        assert code_sum(a, b).k + intersection(a, b).k == a.k + b.k


def test_find_full_weight_word():
    f = gf(3)
    assert find_full_weight_word(code_from_rows(f, [[1, 0, 1]])) is None
    w = find_full_weight_word(code_from_rows(f, [[1, 0, 1], [0, 1, 0]]))
    assert w is not None and np.all(w != 0)
