from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyeq import catalog as cat
from cyeq.diffop import THETA, ThetaOperator, apply, equivalent, frobenius_basis, sequence_from_operator
from cyeq.mum import mirror_map, yukawa
from cyeq.poly import Poly
from cyeq.series import PowerSeries
from cyeq.transforms import (NotASymmetricSquare, ParameterPole, ShapeMismatch, central_binomial_lift,
                             coefficient_diff, dualize, lift_operator, poch, prop7_transform_op,
                             prop7_transform_seq, prop8_transform, prop8_transform_seq, quad_minus_seq,
                             quad_plus_seq, quad_rhs_minus, quad_rhs_plus, rbinom, symmetric_square_closed,
                             symmetric_square_criterion, symmetric_square_root, third_order_shape,
                             verify_quad_transform, very_well_poised_4f3)

T = THETA
H = F(1, 2)


def test_pochhammer_and_binomial():
    assert poch(H, 3) == H * F(3, 2) * F(5, 2)
    assert rbinom(5, 2) == 10 and rbinom(-1, 3) == -1 and rbinom(H, -1) == 0


def test_quadratic_transformations_at_half():
    r1, r2 = verify_quad_transform(H, H, H, H, 20)
    assert r1.is_zero() and r2.is_zero()


def test_integer_generators_match_half_specialization():
    # the generators are the inner coefficients scaled by 1024^n
    N = 8
    plus = quad_rhs_plus(H, H, H, H, N)
    assert plus == very_well_poised_4f3(H, H, H, H, N)
    assert quad_plus_seq(1) == 144 and quad_minus_seq(1) == 112
    for n in range(6):
        coef = poch(F(1, 4), n) * poch(F(3, 4), n) / factorial(n) ** 2
        inner = sum(poch(H, v) ** 2 * poch(H, n - v) / (factorial(v) ** 2 * factorial(n - v)) for v in range(n + 1))
        assert quad_plus_seq(n) == 1024**n * coef * inner
    assert all(quad_minus_seq(n).denominator == 1 for n in range(6))


def test_parameter_pole():
    with pytest.raises(ParameterPole):
        very_well_poised_4f3(H, F(3, 2), H, H, 5)


rat = st.builds(F, st.integers(-9, 9), st.integers(1, 6))


@settings(max_examples=15, deadline=None)
@given(rat, rat, rat, rat)
def test_quadratic_transformations_random(a, b, c, d):
    try:
        r1, r2 = verify_quad_transform(a, b, c, d, 10)
    except ParameterPole:
        return
    assert r1.is_zero() and r2.is_zero()


def test_prop7_sequence_and_operator_agree():
    op = cat.HYPERGEOMETRIC_QUINTIC
    A = sequence_from_operator(op, 20)
    top = prop7_transform_op(op, 3)
    assert sequence_from_operator(top, 20) == prop7_transform_seq(A, 3)
    assert apply(top, PowerSeries(prop7_transform_seq(A, 3))).is_zero()


def test_prop7_keeps_coupling():
    op = cat.HYPERGEOMETRIC_QUINTIC
    b, bt = frobenius_basis(op, 12), frobenius_basis(prop7_transform_op(op, 3), 12)
    m, mt = mirror_map(b), mirror_map(bt)
    assert m.q_over_z == mt.q_over_z
    assert yukawa(b, m) == yukawa(bt, mt)


def test_prop8_sequence():
    A = [1, 2, 3, 4]
    # r = 2: Ahat_n = sum_k p^{n-2k} C(n, 2k) A_k
    assert prop8_transform_seq(A, 1, 2) == [1, 1, 3, 7]
    Ahat, op = prop8_transform(sequence_from_operator(cat.HYPERGEOMETRIC_QUINTIC, 60), 1, 2, 4, 6)
    assert op is not None and apply(op, PowerSeries(Ahat)).is_zero()


def test_dualize_involution_and_printed_dual():
    for op, c in ((cat.OP_55, F(1, 2**18)), (cat.OP_124, F(1, 3**5))):
        assert dualize(dualize(op, c), c) == op.canonical()
    assert coefficient_diff(dualize(cat.OP_55, F(1, 2**18)), cat.OP_55_DUAL_PRINTED) == []
    spots = [(i, j) for i, j, _, _ in coefficient_diff(dualize(cat.OP_124, F(1, 3**5)), cat.OP_124_DUAL_PRINTED)]
    assert spots == [(4, 1), (4, 2)]


def test_dualize_shape_check():
    with pytest.raises(ShapeMismatch):
        dualize(ThetaOperator([T**2, -(T**2 + 1)]), 1)


def test_symmetric_square_family():
    for key, op in cat.THIRD_ORDER.items():
        ok, res, _ = symmetric_square_criterion(op)
        assert ok and res.is_zero()
        root = symmetric_square_root(op)
        u = PowerSeries(sequence_from_operator(root, 20))
        assert u * u == PowerSeries(sequence_from_operator(op, 20))
        P, c = cat.THIRD_ORDER_DATA[key]
        assert equivalent(root, symmetric_square_closed(P[2], P[0], c))


def test_non_symmetric_square_rejected():
    op = ThetaOperator([T**3, -Poly([1, 1, 1, 1])])
    assert not symmetric_square_criterion(op)[0]
    with pytest.raises(NotASymmetricSquare):
        symmetric_square_root(op)


def test_central_binomial_lift():
    for key in cat.LIFT_TABLE:
        lift = lift_operator(cat.THIRD_ORDER[key])
        A = cat.catalog_sequence(key, 30)
        lifted = [comb(2 * n, n) * a for n, a in enumerate(A)]
        assert apply(lift, PowerSeries(lifted)).is_zero()
    P, c = third_order_shape(cat.THIRD_ORDER["alpha"])
    assert lift_operator(cat.THIRD_ORDER["alpha"]) == central_binomial_lift(P, c)
    with pytest.raises(ShapeMismatch):
        third_order_shape(cat.HYPERGEOMETRIC_QUINTIC)
