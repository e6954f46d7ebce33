from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyeq.diffop import (THETA, DOp, NotMUM, Recurrence, SingularStep, ThetaOperator, apply, dz_to_theta,
                         equivalent, find_operator, fit_operator, frobenius_basis, indicial_polynomial, is_mum,
                         local_exponents, nullspace, operator_from_recurrence, recurrence_from_operator,
                         sequence_from_operator, theta_to_dz, unroll)
from cyeq.poly import Poly, RatFunc
from cyeq.series import LogSeries, PowerSeries

T = THETA
APERY3 = ThetaOperator([T**3, -(2 * T + 1) * (17 * T**2 + 17 * T + 5), (T + 1) ** 3])
QUINTIC = ThetaOperator([T**4, -5 * (5 * T + 1) * (5 * T + 2) * (5 * T + 3) * (5 * T + 4)])


def apery(n):
    return sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))


def test_shape_properties():
    assert APERY3.order == 3 and APERY3.zdeg == 2
    assert indicial_polynomial(APERY3) == T**3
    assert is_mum(APERY3) and local_exponents(APERY3) == [0]
    op = ThetaOperator([(T - 1) * T, Poly([1])])
    assert not is_mum(op)
    assert local_exponents(op) == [0, 1]


def test_canonical_form():
    op = ThetaOperator([T**2 * F(-1, 2), T * F(3, 4)])
    c = op.canonical()
    assert c == ThetaOperator([2 * T**2, -3 * T])
    assert c.canonical() == c
    shifted = ThetaOperator([Poly(), Poly(), T**2, T])
    assert shifted.canonical() == ThetaOperator([T**2, T])


def test_composition_commutation_rule():
    z = ThetaOperator([Poly(), Poly([1])])
    th = ThetaOperator([T])
    # theta z = z (theta + 1)
    assert th * z == ThetaOperator([Poly(), T + 1])


def test_dz_round_trip():
    d = theta_to_dz(APERY3)
    assert d.order == 3
    assert dz_to_theta(d).canonical() == APERY3.canonical()
    assert equivalent(APERY3, APERY3.scale(7))
    assert not equivalent(APERY3, QUINTIC)


def test_apply_to_analytic_solution():
    y = PowerSeries([apery(n) for n in range(25)])
    assert apply(APERY3, y).is_zero()
    assert sequence_from_operator(APERY3, 25) == list(y.c)


def test_frobenius_quintic():
    b = frobenius_basis(QUINTIC, 10)
    assert len(b) == 4
    assert list(b[0].parts[0].c) == [F(factorial(5 * n), factorial(n) ** 5) for n in range(11)]
    for j, y in enumerate(b):
        assert y.log_degree == j
        assert apply(QUINTIC, y).is_zero()
    # log parts follow the Frobenius pattern: y_j = sum_k f_{j-k} log^k / k!
    assert b[2].part(1) == b[1].part(0)


def test_frobenius_rejects_non_mum():
    with pytest.raises(NotMUM):
        frobenius_basis(ThetaOperator([(T - 1) * T, Poly([1])]), 5)


def test_recurrence_round_trip():
    rec = recurrence_from_operator(APERY3)
    assert operator_from_recurrence(rec) == APERY3
    vals = unroll(rec, [1], 20)
    assert vals == [apery(n) for n in range(20)]
    assert rec.check(vals) == []


def test_shift_form_round_trip():
    n = Poly.x()
    # (n+1)^2 A_{n+1} = (11 n^2 + 11 n + 3) A_n + n^2 A_{n-1}, written in shift form from n = -1
    rec = Recurrence.from_shift_form([-(n + 1) ** 2, -(11 * (n + 1) ** 2 + 11 * (n + 1) + 3), (n + 2) ** 2],
                                     start=-1)
    vals = unroll(rec, [1], 12)
    assert vals[:5] == [1, 3, 19, 147, 1251]
    back = Recurrence.from_shift_form(rec.shift_form(), rec.start - rec.depth)
    assert back.polys == rec.polys and back.start == rec.start


def test_unroll_singular_step():
    rec = Recurrence([T - 3, Poly([1])])
    with pytest.raises(SingularStep) as e:
        unroll(rec, [1], 6)
    assert e.value.n == 3


def test_fit_recovers_operator():
    vals = [F(apery(n)) for n in range(60)]
    op = find_operator(vals, 3, 4)
    assert op is not None and op == APERY3.canonical()
    assert fit_operator(vals, 2, 2) == []


def test_nullspace():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    ns = nullspace(rows, 3)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in rows)


coeff = st.integers(-6, 6)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(coeff, min_size=1, max_size=4), min_size=1, max_size=3),
       st.lists(coeff, min_size=6, max_size=6))
def test_apply_matches_coefficient_recurrence(rows, ys):
    qs = [Poly(r) for r in rows]
    if all(q.is_zero() for q in qs):
        return
    op = ThetaOperator(qs)
    y = PowerSeries(ys)
    got = apply(op, y)
    rec = Recurrence(op.coeffs, 0)
    want = [rec.residual(list(y.c), n) for n in range(got.order + 1)]
    assert list(got.c) == want


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(coeff, min_size=1, max_size=3), min_size=1, max_size=3),
       st.lists(st.lists(coeff, min_size=1, max_size=3), min_size=1, max_size=3))
def test_composition_is_associative_on_series(r1, r2):
    a, b = (ThetaOperator([Poly(r) for r in rs]) if any(Poly(r) != Poly() for r in rs) else None
            for rs in (r1, r2))
    if a is None or b is None:
        return
    y = PowerSeries([1, 2, -1, 3, 0, 5, 7, -2])
    assert apply(a * b, y) == apply(a, apply(b, y)).truncate(apply(a * b, y).order)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(coeff, min_size=1, max_size=4), min_size=2, max_size=3))
def test_theta_dz_round_trip(rows):
    qs = [Poly(r) for r in rows]
    if all(q.is_zero() for q in qs) or max(q.degree() for q in qs) < 1:
        return
    op = ThetaOperator(qs).canonical()
    back = dz_to_theta(theta_to_dz(op))
    assert equivalent(back, op)
    # theta_to_dz normalizes to monic, so equality is exact only for a z-free leading term
    if all(q.degree() < op.order for q in op.coeffs[1:]):
        assert back.canonical() == op
