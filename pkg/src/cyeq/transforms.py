"""Sequence and operator transformations preserving MUM structure."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .diffop import (THETA, DOp, ThetaOperator, dz_to_theta, find_operator, theta_to_dz)
from .poly import Poly, RatFunc
from .series import PowerSeries


class ParameterPole(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


class NotASymmetricSquare(ValueError):
    pass


def poch(a, n: int) -> Fraction:
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def rbinom(x, k: int) -> Fraction:
    """Binomial coefficient with rational top; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    out = Fraction(1)
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


def cbinom(n: int) -> int:
    return comb(2 * n, n)


def quad_plus_seq(n: int) -> int:
    s = sum(4 ** (n - v) * cbinom(v) ** 2 * cbinom(n - v) for v in range(n + 1))
    return factorial(4 * n) // (factorial(2 * n) * factorial(n) ** 2) * s


def _prod14(m: int, start: int) -> int:
    out = 1
    for j in range(m):
        out *= start + 4 * j
    return out


def quad_minus_seq(n: int) -> Fraction:
    total = Fraction(0)
    for mu in range(n + 1):
        inner = sum(4 ** (mu - v) * cbinom(v) * comb(mu, v) * (-1) ** v for v in range(mu + 1))
        total += (Fraction(16 ** (n - mu) * cbinom(mu) * _prod14(n - mu, 1), factorial(n - mu))
                  * Fraction(_prod14(mu, 3), factorial(mu)) * inner)
    return 4**n * Fraction(_prod14(n, 1), factorial(n)) * total


def _check_lower(params, N):
    for p in params:
        p = Fraction(p)
        if p.denominator == 1 and p <= 0 and -p < N:
            raise ParameterPole(f"lower parameter {p} makes a Pochhammer symbol vanish")


def _binom_series(e, sign: int, N: int) -> PowerSeries:
    """(1 + sign z)^e."""
    return PowerSeries([rbinom(e, k) * sign**k for k in range(N + 1)])


def very_well_poised_4f3(a, b, c, d, N: int) -> PowerSeries:
    a, b, c, d = map(Fraction, (a, b, c, d))
    _check_lower((1 + a - b, 1 + a - c, 1 + a - d), N + 1)
    return PowerSeries([poch(a, n) * poch(b, n) * poch(c, n) * poch(d, n)
                        / (factorial(n) * poch(1 + a - b, n) * poch(1 + a - c, n) * poch(1 + a - d, n))
                        for n in range(N + 1)])


def quad_rhs_plus(a, b, c, d, N: int) -> PowerSeries:
    a, b, c, d = map(Fraction, (a, b, c, d))
    X = PowerSeries([0, 4], N) * _binom_series(-2, 1, N)
    acc = PowerSeries.zero(N)
    Xn = PowerSeries.one(N)
    for n in range(N + 1):
        inner = sum((poch(b, v) * poch(c, v) * poch(1 + a - b - c, n - v)
                     / (factorial(v) * factorial(n - v) * poch(1 + a - d, v)) for v in range(n + 1)),
                    Fraction(0))
        coef = poch(a / 2, n) * poch(Fraction(1, 2) + a / 2, n) / (poch(1 + a - b, n) * poch(1 + a - c, n))
        acc = acc + Xn * (coef * inner)
        Xn = Xn * X
    return _binom_series(-a, 1, N) * acc


def quad_rhs_minus(a, b, c, d, N: int) -> PowerSeries:
    a, b, c, d = map(Fraction, (a, b, c, d))
    Y = PowerSeries([0, -4], N) * _binom_series(-2, -1, N)
    acc = PowerSeries.zero(N)
    Yn = PowerSeries.one(N)
    h = Fraction(1, 2) + a / 2
    for n in range(N + 1):
        total = Fraction(0)
        for mu in range(n + 1):
            inner = sum((poch(c, v) * (-1) ** v / (factorial(v) * factorial(mu - v) * poch(1 + a - d, v))
                         for v in range(mu + 1)), Fraction(0))
            total += (poch(b, mu) * poch(h, mu) * poch(h - b, n - mu)
                      / (factorial(n - mu) * poch(1 + a - c, mu)) * inner)
        coef = poch(a / 2, n) / poch(1 + a - b, n)
        acc = acc + Yn * (coef * total)
        Yn = Yn * Y
    return _binom_series(-a, -1, N) * acc


def verify_quad_transform(a, b, c, d, N: int) -> tuple[PowerSeries, PowerSeries]:
    """Residuals of both quadratic transformations of the very-well-poised 4F3."""
    lhs = very_well_poised_4f3(a, b, c, d, N)
    return lhs - quad_rhs_plus(a, b, c, d, N), lhs - quad_rhs_minus(a, b, c, d, N)


def prop7_transform_seq(A, p) -> list[Fraction]:
    """sum_k p^{n-k} binom(2n-2k, n-k) A_k: the coefficients of y / sqrt(1 - 4 p z)."""
    p = Fraction(p)
    return [sum((p ** (n - k) * cbinom(n - k) * Fraction(A[k]) for k in range(n + 1)), Fraction(0))
            for n in range(len(A))]


def conjugate(op: ThetaOperator, g: RatFunc) -> ThetaOperator:
    """Operator for w = y/u where u'/u = g: sum a_k (D + g)^k."""
    d = theta_to_dz(op)
    shift = DOp([g, 1])
    acc = DOp([0])
    power = DOp.identity()
    for a in d.c:
        acc = acc + power.lmul(a)
        power = shift.compose(power)
    return dz_to_theta(acc)


def prop7_transform_op(op: ThetaOperator, p) -> ThetaOperator:
    p = Fraction(p)
    # u = sqrt(1 - 4pz), u'/u = -2p/(1 - 4pz)
    g = RatFunc(Poly((-2 * p,)), Poly((1, -4 * p)))
    return conjugate(op, g)


def prop8_transform_seq(A, p, r: int) -> list[Fraction]:
    p = Fraction(p)
    out = []
    for n in range(len(A)):
        s = Fraction(0)
        k = 0
        while r * k <= n:
            s += p ** (n - r * k) * comb(n, r * k) * Fraction(A[k])
            k += 1
        out.append(s)
    return out


def prop8_transform(A, p, r: int, order: int = 4, zdeg: int = 12):
    """(transformed sequence, fitted operator or None). A must be long enough for the fit."""
    Ahat = prop8_transform_seq(A, p, r)
    return Ahat, find_operator(Ahat, order, zdeg)


def central_binomial_lift(P: Poly, c) -> ThetaOperator:
    """Operator for binom(2n,n) A_n from theta^3 - z(2theta+1)P(theta) + c z^2 (theta+1)^3."""
    T = THETA
    c = Fraction(c)
    return ThetaOperator([T**4, -2 * (2 * T + 1) ** 2 * P,
                          4 * c * (T + 1) ** 2 * (2 * T + 1) * (2 * T + 3)]).canonical()


def third_order_shape(op: ThetaOperator) -> tuple[Poly, Fraction]:
    """(P, c) if op is theta^3 - z(2theta+1)P(theta) + c z^2 (theta+1)^3."""
    T = THETA
    op = op.canonical()
    if op.zdeg != 2 or op.coeffs[0] != T**3:
        raise ShapeMismatch("expected theta^3 - z(2theta+1)P + c z^2 (theta+1)^3")
    P, rem = (-op.coeffs[1]).divmod(2 * T + 1)
    top = op.coeffs[2]
    c = top.lc()
    if not rem.is_zero() or top != (T + 1) ** 3 * c:
        raise ShapeMismatch("expected theta^3 - z(2theta+1)P + c z^2 (theta+1)^3")
    return P, c


def lift_operator(op: ThetaOperator) -> ThetaOperator:
    P, c = third_order_shape(op)
    return central_binomial_lift(P, c)


def symmetric_square_criterion(op: ThetaOperator):
    """(holds, residual, (s0, s1, s2)) for a third-order operator."""
    d = theta_to_dz(op)
    if d.order != 3:
        raise ValueError("criterion applies to third-order operators")
    s0, s1, s2 = d.c[:3]
    res = (s1 * s2 / 3 - s2**3 * Fraction(2, 27) + s1.deriv() / 2 - s2.deriv().deriv() / 6
           - s2 * s2.deriv() / 3 - s0)
    return res.is_zero(), res, (s0, s1, s2)


def symmetric_square_root(op: ThetaOperator) -> ThetaOperator:
    ok, _, (s0, s1, s2) = symmetric_square_criterion(op)
    if not ok:
        raise NotASymmetricSquare("third-order operator is not a symmetric square")
    p1 = s2 / 3
    p0 = s1 / 4 - s2 * s2 / 18 - s2.deriv() / 12
    return dz_to_theta(DOp([p0, p1, 1]))


def symmetric_square_closed(a, b, c) -> ThetaOperator:
    """Square root of theta^3 - z(2theta+1)(a theta^2 + a theta + b) + c z^2 (theta+1)^3."""
    T = THETA
    h = Fraction(1, 2)
    return ThetaOperator([T**2, -(2 * a * T**2 + a * T + Fraction(b) / 2),
                          Fraction(c) * (T + h) ** 2]).canonical()


def dualize(op: ThetaOperator, c) -> ThetaOperator:
    """Reflection z -> c/z for a top term proportional to (theta+1)^s or (2theta+1)^s."""
    T = THETA
    op = op.canonical()
    s = op.order
    top = op.coeffs[-1]
    if top.degree() == s and top == (T + 1) ** s * top.lc():
        shift = Fraction(1)
    elif top.degree() == s and top == (T + Fraction(1, 2)) ** s * top.lc():
        shift = Fraction(1, 2)
    else:
        raise ShapeMismatch("top z-coefficient must be a multiple of (theta+1)^s or (2theta+1)^s")
    c = Fraction(c)
    d = op.zdeg
    refl = Poly((-shift, -1))  # theta -> -theta - shift
    qs = [op.coeffs[d - j](refl) * c ** (d - j) for j in range(d + 1)]
    return ThetaOperator(qs).canonical()


def coefficient_diff(a: ThetaOperator, b: ThetaOperator) -> list[tuple[int, int, Fraction, Fraction]]:
    """(z-power, theta-power, a-coefficient, b-coefficient) where canonical forms differ."""
    a, b = a.canonical(), b.canonical()
    out = []
    for i in range(max(len(a.coeffs), len(b.coeffs))):
        qa = a.coeffs[i] if i < len(a.coeffs) else Poly()
        qb = b.coeffs[i] if i < len(b.coeffs) else Poly()
        for j in range(max(len(qa), len(qb))):
            if qa[j] != qb[j]:
                out.append((i, j, qa[j], qb[j]))
    return out
