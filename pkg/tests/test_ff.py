import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from powerdecoding.ff import Field, field_make, find_irreducible, is_irreducible


def clmul_mod(a, b, mod=0b1011):
    # carry-less product reduced by x^3+x+1, done with plain integer bit ops
    r = 0
    for i in range(3):
        if (b >> i) & 1:
            r ^= a << i
    for i in range(4, 2, -1):
        if (r >> i) & 1:
            r ^= mod << (i - 3)
    return r


FIELDS = [Field(2), Field(5), Field(17), Field(251), Field(2, 3, [1, 1, 0, 1]), Field(3, 2), Field(2, 8), Field(5, 3)]


def test_make_prime_and_extension():
    F = field_make(5)
    assert (F.p, F.m, F.q, F.modulus) == (5, 1, 5, None)
    G = field_make(2, 3, [1, 1, 0, 1])
    assert G.q == 8
    # no root at 0 or 1, so the cubic has no linear factor
    assert all(sum(c * v**i for i, c in enumerate([1, 1, 0, 1])) % 2 for v in (0, 1))


@pytest.mark.parametrize("p, m, modulus", [(4, 1, None), (2, 3, [1, 0, 0, 1]), (2, 3, [1, 1, 1])])
def test_make_errors(p, m, modulus):
    with pytest.raises(ValueError):
        Field(p, m, modulus)


def test_gf5_multiplication_table():
    F = Field(5)
    for a, b in itertools.product(range(5), repeat=2):
        assert int(F.mul(a, b)) == (a * b) % 5
    assert int(F.mul(3, 4)) == 2


def test_gf8_matches_carryless_reference():
    F = Field(2, 3, [1, 1, 0, 1])
    for a, b in itertools.product(range(8), repeat=2):
        assert int(F.mul(a, b)) == clmul_mod(a, b)
    # x * x^2 = x + 1
    assert int(F.mul(0b010, 0b100)) == 0b011
    assert F(0b011).vector == [1, 1, 0]


def test_default_modulus_is_lowest_irreducible():
    assert find_irreducible(2, 3) == [1, 1, 0, 1]
    assert find_irreducible(2, 8) == [1, 1, 0, 1, 1, 0, 0, 0, 1]
    assert is_irreducible([1, 1, 1], 2) and not is_irreducible([1, 0, 1], 2)


def test_inverse_examples():
    F = Field(5)
    assert F(1).inverse() == 1
    assert F(2).inverse() == 3
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(ZeroDivisionError):
        F.div(3, 0)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        Field(5)(1) + Field(7)(1)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_fermat_and_double_inverse(F):
    a = np.arange(1, F.q)
    if F.q <= 512:
        assert np.all(F.power(a, F.q - 1) == 1)
    assert np.array_equal(F.inv(F.inv(a)), a)
    assert np.all(F.mul(a, F.inv(a)) == 1)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_axioms_random_triples(F):
    rng = np.random.default_rng(F.q)
    a, b, c = rng.integers(0, F.q, (3, 1000))
    assert np.array_equal(F.add(a, F.add(b, c)), F.add(F.add(a, b), c))
    assert np.array_equal(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c))
    assert np.array_equal(F.add(a, b), F.add(b, a))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.sub(F.add(a, b), b), a)
    assert np.array_equal(F.mul(a, 1), a)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_element_operators(F, data):
    a = F(data.draw(st.integers(0, F.q - 1)))
    b = F(data.draw(st.integers(1, F.q - 1)))
    assert (a / b) * b == a
    assert a - a == F.zero
    assert -a + a == 0
    assert a**2 == a * a


def test_parse_and_describe():
    assert Field.parse("251^1") == Field(251)
    assert Field.parse("17") == Field(17)
    F = Field.parse("2^8/[1,0,1,1,1,0,0,0,1]")
    assert F.q == 256 and F.modulus == (1, 0, 1, 1, 1, 0, 0, 0, 1)
    assert Field.parse(F.describe()) == F
    with pytest.raises(ValueError):
        Field.parse("two")


def test_matmul_matches_loop():
    for F in (Field(17), Field(3, 2)):
        rng = np.random.default_rng(1)
        A = rng.integers(0, F.q, (4, 6))
        B = rng.integers(0, F.q, (6, 3))
        ref = np.zeros((4, 3), dtype=np.int64)
        for i in range(6):
            ref = F.add(ref, F.mul(A[:, i, None], B[i]))
        assert np.array_equal(F.matmul(A, B), ref)
