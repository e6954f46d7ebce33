from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyeq import catalog as cat
from cyeq.diffop import THETA, ThetaOperator, apply, find_operator, frobenius_basis, sequence_from_operator, unroll
from cyeq.hadamard import (DegenerateLeading, had_closed_2x2, had_closed_2x3, had_square_closed, hadamard_seq,
                           meurman_product, meurman_square, normal_form, second_order_shape)
from cyeq.mum import mirror_map, yukawa
from cyeq.poly import Poly
from cyeq.series import PowerSeries

T = THETA


def test_hadamard_seq():
    assert hadamard_seq([1, 2, 3], [4, 5, 6, 7]) == [4, 10, 18]


def test_normal_form_reproduces_sequence():
    for key in ("a", "b", "k", "A"):
        P, Q = normal_form(cat.SECOND_ORDER[key])
        A = cat.catalog_sequence(key, 12)
        for n in range(10):
            assert A[n + 2] == P(n) * A[n + 1] + Q(n) * A[n]


def test_second_order_shape():
    P, c = second_order_shape(cat.SECOND_ORDER["m"])
    assert P == 24 * (2 * T + 1) and c == 1296
    with pytest.raises(ValueError):
        second_order_shape(cat.HYPERGEOMETRIC_QUINTIC)


def test_closed_2x2_annihilates_product():
    P, c = second_order_shape(cat.SECOND_ORDER["b"])
    Q, _ = second_order_shape(cat.SECOND_ORDER["A"])
    op = had_closed_2x2(P, c, Q)
    vals = hadamard_seq(cat.catalog_sequence("b", 30), cat.catalog_sequence("A", 30))
    assert apply(op, PowerSeries(vals)).is_zero()


def test_closed_2x3_annihilates_product():
    P, c = cat.THIRD_ORDER_DATA["gamma"]
    Q, _ = second_order_shape(cat.SECOND_ORDER["B"])
    op = had_closed_2x3(P, -c, Q)
    vals = hadamard_seq(cat.catalog_sequence("gamma", 30), cat.catalog_sequence("B", 30))
    assert apply(op, PowerSeries(vals)).is_zero()


@pytest.mark.parametrize("key,A,B", [("k", 3, 81), ("l", 4, 64), ("m", 24, 1296)])
def test_square_formula(key, A, B):
    op = had_square_closed(A, B)
    s = [x * x for x in cat.catalog_sequence(key, 40)]
    assert sequence_from_operator(op, 40) == s


def test_meurman_square_matches_closed_formula():
    P, Q = normal_form(cat.SECOND_ORDER["l"])
    rec = meurman_square(P, Q)
    s = [x * x for x in cat.catalog_sequence("l", 70)]
    vals = unroll(rec, s[:rec.start], 70)
    assert vals == s
    assert find_operator(vals, 4, 4) == had_square_closed(4, 64)


def test_meurman_product_km():
    Pa, Qa = normal_form(cat.SECOND_ORDER["k"])
    Pb, Qb = normal_form(cat.SECOND_ORDER["m"])
    rec = meurman_product(Pa, Qa, Pb, Qb)
    assert rec.depth == 4
    prod = hadamard_seq(cat.catalog_sequence("k", 70), cat.catalog_sequence("m", 70))
    assert rec.check(prod) == []
    assert find_operator(prod, 4, 8) == cat.KM_PRODUCT.canonical()


def test_meurman_degenerate():
    P, Q = normal_form(ThetaOperator([T**2, Poly(), -(T + 1) ** 2]))
    with pytest.raises(DegenerateLeading):
        meurman_square(P, Q)


small = st.integers(-6, 6).filter(lambda x: x != 0)


@settings(max_examples=25, deadline=None)
@given(small, small, st.integers(-6, 6), small)
def test_closed_2x2_random_parameters(a, b, c, d):
    # theta^2 - z(a theta^2 + a theta + b) - c z^2 (theta+1)^2 against theta^2 - d z (2theta+1)^2
    P = a * T**2 + a * T + b
    Q = d * (2 * T + 1) ** 2
    left = ThetaOperator([T**2, -P, -c * (T + 1) ** 2])
    right = ThetaOperator([T**2, -Q])
    vals = hadamard_seq(sequence_from_operator(left, 25), sequence_from_operator(right, 25))
    assert apply(had_closed_2x2(P, c, Q), PowerSeries(vals)).is_zero()


def test_constant_coupling_product():
    # (h)*(C) has a constant coupling, so it carries no instanton data
    P, c = second_order_shape(cat.SECOND_ORDER["h"])
    Q, _ = second_order_shape(cat.SECOND_ORDER["C"])
    b = frobenius_basis(had_closed_2x2(P, c, Q), 22)
    K = yukawa(b, mirror_map(b))
    assert K.order >= 20 and K[0] == 1 and all(x == 0 for x in K.c[1:])
