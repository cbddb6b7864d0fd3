from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relhull.errors import (
    DivisionByZero,
    ExponentOutOfRange,
    FieldTooLarge,
    MixedFields,
    NonPrimeCharacteristic,
    RangeError,
    ReducibleModulus,
)
from relhull.field import conway_polynomial, field_new, frobenius, gf

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


def test_prime_field_generator():
    f = field_new(3, 1)
    assert f.q == 3
    assert f.primitive_element == 2


def test_gf9_conway_primitive_element():
    f = field_new(3, 2)
    assert f.modulus == (2, 2, 1)  # x^2 + 2x + 2
    a = f.primitive_element
    assert a * a == a + 1
    assert a.order() == 8


def test_gf4_elements():
    f = field_new(2, 2)
    assert f.modulus == (1, 1, 1)
    w = f.primitive_element
    assert {int(x) for x in f.elements()} == {0, 1, int(w), int(w + 1)}
    assert w * w == w + 1


@pytest.mark.parametrize("q", SMALL_Q)
def test_powers_of_primitive_element_cover_units(q):
    f = gf(q)
    a = f.primitive_element
    seen = {int(a**i) for i in range(q - 1)}
    assert seen == set(range(1, q))


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    f = gf(q)
    x = np.arange(q)
    A, B = np.meshgrid(x, x, indexing="ij")
    assert np.array_equal(f.add(A, B), f.add(B, A))
    assert np.array_equal(f.mul(A, B), f.mul(B, A))
    assert np.array_equal(f.sub(f.add(A, B), B), A)
    nz = x[1:]
    assert np.all(f.mul(nz, f.inv(nz)) == 1)
    C = x[:, None, None]
    lhs = f.mul(C, f.add(A[None], B[None]))
    rhs = f.add(f.mul(C, A[None]), f.mul(C, B[None]))
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_frobenius_is_automorphism(q):
    f = gf(q)
    x = np.arange(q)
    A, B = np.meshgrid(x, x, indexing="ij")
    for e in range(f.l):
        assert np.array_equal(f.frob(f.add(A, B), e), f.add(f.frob(A, e), f.frob(B, e)))
        assert np.array_equal(f.frob(f.mul(A, B), e), f.mul(f.frob(A, e), f.frob(B, e)))
        # the fixed field of x -> x^(p^e) is GF(p^gcd(e, l))
        fixed = set(np.flatnonzero(f.frob(x, e) == x).tolist())
        assert len(fixed) == (q if e == 0 else f.p ** np.gcd(e, f.l))


def test_frobenius_matches_power():
    f = gf(9)
    a = f.primitive_element
    assert frobenius(a, 1) == a**3
    assert frobenius(a, 0) == a
    with pytest.raises(ExponentOutOfRange):
        frobenius(a, 2)


@pytest.mark.parametrize("p,l", [(2, 3), (2, 4), (3, 3), (5, 2), (7, 2), (2, 8)])
def test_conway_moduli_are_primitive(p, l):
    f = field_new(p, l)
    assert f.modulus == conway_polynomial(p, l)
    # with a Conway modulus x itself is primitive
    assert f.primitive_element.coefficients[:2] == (0, 1)


def test_custom_modulus_overrides_default():
    f = field_new(3, 2, [2, 1, 1])  # x^2 + x + 2
    assert f.modulus == (2, 1, 1)
    assert f != field_new(3, 2)
    a = f.primitive_element
    assert a * a == 1 - a


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        field_new(4, 1)
    with pytest.raises(NonPrimeCharacteristic):
        gf(6)
    with pytest.raises(NonPrimeCharacteristic):
        gf(1)
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, [1, 0, 1])  # (x+1)^2
    with pytest.raises(FieldTooLarge):
        field_new(2, 17)
    with pytest.raises(DivisionByZero):
        gf(5).zero.inv()
    with pytest.raises(MixedFields):
        gf(4).one + gf(2).one
    with pytest.raises(RangeError):
        gf(5)(7)


def test_negative_integers_are_prime_field_residues():
    f = gf(9)
    assert f.scalar(-1) == 2
    assert f.one + (-1) == 0


@settings(max_examples=200, deadline=None)
@given(q=st.sampled_from(SMALL_Q), data=st.data())
def test_power_laws(q, data):
    f = gf(q)
    x = f(data.draw(st.integers(1, q - 1)))
    i, j = data.draw(st.integers(0, 40)), data.draw(st.integers(0, 40))
    assert x ** (i + j) == x**i * x**j
    assert x ** (q - 1) == 1
    assert x**-1 == x.inv()


def test_all_tables_agree_with_slow_path():
    for q in (4, 9, 25):
        f = gf(q)
        codes = list(range(q))
        for a, b in itertools.product(codes, repeat=2):
            assert int(f.mul(a, b)) == int(f._slow_mul(np.int64(a), np.int64(b)))
