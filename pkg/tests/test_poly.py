import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from powerdecoding.ff import Field
from powerdecoding.poly import NEG_INF, Poly, poly_interpolate

F5 = Field(5)
FIELDS = [Field(5), Field(17), Field(2, 4), Field(3, 2)]


def P(*c, F=F5):
    return Poly(F, list(c))


def test_arith_examples():
    assert P(1, 1) * P(-1, 1) == P(4, 0, 1)
    p = P(1, 2, 3)
    assert p + Poly.zero(F5) == p
    assert (p * Poly.zero(F5)).is_zero
    assert (P(1, 1) * P(1, 1)).degree == 2


def test_zero_degree_is_bottom():
    z = Poly.zero(F5)
    assert z.degree == NEG_INF
    assert z.degree < -10**9
    assert z.degree <= 3 + 2


def test_divmod_examples():
    assert divmod(P(4, 0, 1), P(1, 1)) == (P(4, 1), Poly.zero(F5))
    p = P(3, 0, 2, 1)
    assert divmod(p, Poly.one(F5)) == (p, Poly.zero(F5))
    assert divmod(p, p) == (Poly.one(F5), Poly.zero(F5))
    with pytest.raises(ZeroDivisionError):
        divmod(p, Poly.zero(F5))


def test_eval_examples():
    assert P(4, 0, 1)(F5(1)) == 0
    assert P(3)(F5(2)) == 3
    assert Poly.zero(F5)(F5(4)) == 0


def test_interpolate_examples():
    assert poly_interpolate([(F5(0), F5(1)), (F5(1), F5(2))]) == P(1, 1)
    assert poly_interpolate([(F5(3), F5(2))]) == P(2)
    with pytest.raises(ValueError):
        poly_interpolate([(F5(1), F5(1)), (F5(1), F5(2))])


def test_rev_examples():
    assert P(0, 2, 1).rev() == P(1, 2)
    assert P(3).rev() == P(3)
    assert P(1, 0, 0, 1).rev() == P(1, 0, 0, 1)
    assert P(0, 2, 1).rev(4) == P(0, 0, 1, 2)
    with pytest.raises(ValueError):
        Poly.zero(F5).rev()


def test_series_inverse_examples():
    assert P(1, -1).series_inv(3) == P(1, 1, 1)
    assert P(1).series_inv(7) == P(1)
    with pytest.raises(ZeroDivisionError):
        P(0, 1).series_inv(2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_series_inverse_property(F, data):
    c = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=8))
    c[0] = data.draw(st.integers(1, F.q - 1))
    prec = data.draw(st.integers(1, 12))
    p = Poly(F, c)
    assert (p * p.series_inv(prec)).truncate(prec) == Poly.one(F)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_divmod_roundtrip_random(F):
    rng = np.random.default_rng(7)
    for _ in range(1000):
        a = Poly(F, rng.integers(0, F.q, rng.integers(0, 12)))
        b = Poly(F, rng.integers(0, F.q, rng.integers(1, 8)))
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_interpolate_recovers_random_polynomial(F):
    rng = np.random.default_rng(3)
    for n in (1, 2, 5, min(F.q, 12)):
        xs = rng.choice(F.q, n, replace=False)
        f = Poly(F, rng.integers(0, F.q, n))
        assert Poly.interpolate(F, xs, f(xs)) == f


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_ring_properties(F, data):
    coeffs = st.lists(st.integers(0, F.q - 1), max_size=7)
    a, b, c = (Poly(F, data.draw(coeffs)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if not a.is_zero and not b.is_zero:
        assert (a * b).degree == a.degree + b.degree
    x0 = data.draw(st.integers(0, F.q - 1))
    assert (a * b)(F(x0)) == a(F(x0)) * b(F(x0))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_rev_multiplicative(F, data):
    def nz_const():
        c = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=6))
        c[0] = data.draw(st.integers(1, F.q - 1))
        return Poly(F, c)
    a, b = nz_const(), nz_const()
    assert (a * b).rev() == a.rev() * b.rev()
    assert a.rev().rev() == a


def test_poly_is_immutable():
    p = P(1, 2)
    with pytest.raises(AttributeError):
        p.coeffs = None
    with pytest.raises(ValueError):
        p.coeffs[0] = 3


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        P(1) + Poly(Field(7), [1])
