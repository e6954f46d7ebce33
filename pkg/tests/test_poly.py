from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyeq.poly import Poly, RatFunc, falling, poly_gcd
from strategies import polys, rationals

X = Poly.x()


def test_basic_arithmetic():
    p = (X + 1) ** 3
    assert p == Poly([1, 3, 3, 1])
    assert p.degree() == 3 and p.lc() == 1
    assert p(F(1, 2)) == F(27, 8)
    assert p.deriv() == 3 * (X + 1) ** 2
    assert p.shift(-1) == X**3
    assert Poly().is_zero() and Poly().degree() < 0


def test_divmod_and_gcd():
    a = (X - 2) * (X + 3) ** 2
    b = (X + 3) * (2 * X + 1)
    q, r = a.divmod(X + 3)
    assert r.is_zero() and q == (X - 2) * (X + 3)
    assert poly_gcd(a, b) == X + 3
    assert poly_gcd(Poly(), b) == b.monic()


def test_rational_roots():
    p = 6 * (X - F(1, 2)) * (X + F(2, 3)) * X * (X**2 + 1)
    assert p.rational_roots() == [F(-2, 3), F(0), F(1, 2)]
    with pytest.raises(ValueError):
        Poly().rational_roots()


def test_primitive_and_integral():
    p = Poly([F(1, 2), F(3, 4)])
    assert not p.is_integral()
    assert p.denominator_lcm() == 4
    assert p.primitive() == Poly([2, 3])


def test_falling():
    assert falling(3)(5) == 5 * 4 * 3
    assert falling(0) == Poly([1])


def test_ratfunc_reduces():
    f = RatFunc((X - 1) * (X + 2), (X - 1) * X)
    assert f == RatFunc(X + 2, X)
    assert f(3) == F(5, 3)
    assert (f - f).is_zero()
    assert (f * f.inverse()) == RatFunc.lift(1)
    assert RatFunc(X**2, X).is_poly()


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(polys(), polys(max_deg=3).filter(lambda p: not p.is_zero()))
def test_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree() < b.degree()


@given(polys(max_deg=4), rationals, rationals)
def test_shift_is_translation(p, a, v):
    assert p.shift(a)(v) == p(v + a)


@given(polys(max_deg=4), polys(max_deg=4))
def test_product_rule(a, b):
    assert (a * b).deriv() == a.deriv() * b + a * b.deriv()


@settings(max_examples=50)
@given(polys(max_deg=3, elems=st.integers(-9, 9)).filter(lambda p: not p.is_zero()),
       polys(max_deg=3, elems=st.integers(-9, 9)).filter(lambda p: not p.is_zero()),
       polys(max_deg=2, elems=st.integers(-9, 9)).filter(lambda p: p.degree() >= 1))
def test_gcd_divides_and_contains_common_factor(a, b, g):
    d = poly_gcd(a * g, b * g)
    assert (a * g % d).is_zero() and (b * g % d).is_zero()
    assert (d % g.monic()).is_zero()
