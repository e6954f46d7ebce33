"""Hadamard (termwise) products of sequences and their operators."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .diffop import THETA, Recurrence, ThetaOperator, _poly_lcm
from .poly import Poly, RatFunc


class DegenerateLeading(ValueError):
    pass


def hadamard_seq(A, B) -> list[Fraction]:
    n = min(len(A), len(B))
    return [Fraction(A[k]) * Fraction(B[k]) for k in range(n)]


def _sh(f: RatFunc, k: int) -> RatFunc:
    return RatFunc(f.num.shift(k), f.den.shift(k))


def normal_form(op: ThetaOperator) -> tuple[RatFunc, RatFunc]:
    """(P, Q) with A_{n+2} = P(n) A_{n+1} + Q(n) A_n for the analytic solution.

    Operators of z-degree 1 (first-order recurrences A_{n+1} = b(n) A_n) are
    lifted to A_{n+2} = (b(n+1) - 1) A_{n+1} + b(n) A_n, a genuine second-order
    form; the plain lift with Q = 0 makes the product formulas degenerate.
    """
    op = op.canonical()
    q = list(op.coeffs) + [Poly()] * (3 - len(op.coeffs))
    if op.zdeg > 2:
        raise ValueError("operator is not of second-order recurrence type")
    q0 = q[0]
    if op.zdeg == 1:
        b = RatFunc(-q[1], q0.shift(1))
        return _sh(b, 1) - 1, b
    P = RatFunc(-q[1].shift(1), q0.shift(2))
    Q = RatFunc(-q[2], q0.shift(2))
    return P, Q


def _to_recurrence(coeffs: list[RatFunc]) -> Recurrence:
    den = reduce(_poly_lcm, (c.den for c in coeffs), Poly((1,)))
    polys = [c.num * (den // c.den) for c in coeffs]
    return Recurrence.from_shift_form(polys, start=0).canonical()


def meurman_product(P1: RatFunc, Q1: RatFunc, P2: RatFunc, Q2: RatFunc) -> Recurrence:
    """Fourth-order recurrence for C_n = A_n B_n from two second-order ones."""
    def parts(P, Q):
        R = _sh(P, 1) * P + _sh(Q, 1)
        S = _sh(P, 1) * Q
        U = _sh(P, 2) * R + _sh(Q, 2) * P
        V = _sh(P, 2) * S + _sh(Q, 2) * Q
        return R, S, U, V

    R1, S1, U1, V1 = parts(P1, Q1)
    R2, S2, U2, V2 = parts(P2, Q2)
    T2 = R2 * S1 * U1 * V2 - R1 * S2 * U2 * V1
    T3 = P1 * Q2 * U2 * V1 - P2 * Q1 * U1 * V2
    T4 = R1 * S2 * P2 * Q1 - R2 * S1 * P1 * Q2
    if T4.is_zero():
        raise DegenerateLeading("leading coefficient of the product recurrence vanishes")
    W0 = Q1 * Q2 * T2 + S1 * S2 * T3 + V1 * V2 * T4
    W1 = P1 * P2 * T2 + R1 * R2 * T3 + U1 * U2 * T4
    return _to_recurrence([-W0, -W1, T2, T3, T4])


def meurman_square(P: RatFunc, Q: RatFunc) -> Recurrence:
    """Third-order recurrence for C_n = A_n^2."""
    R = _sh(P, 1) * P + _sh(Q, 1)
    S = _sh(P, 1) * Q
    T = R * Q - P * S
    lead = P * Q
    if lead.is_zero():
        raise DegenerateLeading("P Q vanishes identically")
    return _to_recurrence([Q * S * T, -(P * R * T), -(R * S), lead])


def had_closed_2x2(P: Poly, c, Q: Poly) -> ThetaOperator:
    """(theta^2 - z P - c z^2 (theta+1)^2) * (theta^2 - z Q)."""
    T = THETA
    c = Fraction(c)
    return ThetaOperator([T**4, -(P * Q), -c * Q.shift(1) * Q]).canonical()


def had_square_closed(A, B) -> ThetaOperator:
    """(theta^2 - A z (2theta+1) - B z^2 (theta+1)^2) squared termwise."""
    T = THETA
    A, B = Fraction(A), Fraction(B)
    A2 = A * A
    return ThetaOperator([
        T**4,
        -(2 * B * T**4 + A2 * (2 * T + 1) ** 2),
        -B * (2 * T + 1) * (2 * B * T**2 + 2 * B * T + 4 * A2 + B),
        B**2 * (2 * B * T**4 + 8 * B * T**3 + (4 * A2 + 12 * B) * T**2 + (4 * A2 + 8 * B) * T + A2 + 2 * B),
        -(B**4) * (T + 1) ** 4,
    ]).canonical()


def had_closed_2x3(P: Poly, c, Q: Poly) -> ThetaOperator:
    """(theta^3 - z(2theta+1) P - c z^2 (theta+1)^3) * (theta^2 - z Q)."""
    T = THETA
    c = Fraction(c)
    return ThetaOperator([T**5, -(2 * T + 1) * P * Q, -c * (T + 1) * Q.shift(1) * Q]).canonical()


def second_order_shape(op: ThetaOperator) -> tuple[Poly, Fraction]:
    """(P, c) for theta^2 - z P(theta) - c z^2 (theta+1)^2 (c = 0 allowed)."""
    T = THETA
    op = op.canonical()
    if op.coeffs[0] != T**2 or op.zdeg > 2:
        raise ValueError("expected theta^2 - z P - c z^2 (theta+1)^2")
    P = -op.coeffs[1] if op.zdeg >= 1 else Poly()
    if op.zdeg == 2:
        top = op.coeffs[2]
        c = -top.lc()
        if top != (T + 1) ** 2 * (-c):
            raise ValueError("z^2 coefficient is not a multiple of (theta+1)^2")
    else:
        c = Fraction(0)
    return P, c
