"""Second exterior power of fourth-order operators and its consequences.

For y'''' + a3 y''' + a2 y'' + a1 y' + a0 y = 0 the Wronskians
Y = y ỹ' - y' ỹ of solution pairs satisfy an order-6 equation, or an
order-5 one when V below vanishes identically. The operator returned acts
on w = z Y.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diffop import DOp, ThetaOperator, dz_to_theta, frobenius_basis, theta_to_dz
from .mum import MirrorData, lambert_decompose, mirror_map, yukawa
from .poly import Poly, RatFunc
from .series import LogSeries, PowerSeries

HALF = Fraction(1, 2)


def _chain(a0, a1, a2, a3):
    """U, W and V of the elimination: W = V*u4 with u4 = y' ỹ'' - y'' ỹ'."""
    U = DOp([a1, a2, a3, 1])
    U1 = U.diff()
    W = (U1.diff() + U1.lmul(Fraction(3, 2) * a3) + U.lmul(a2 + a3 * a3 * Fraction(1, 4))
         - DOp([2 * (a0.deriv() + a0 * a3), 4 * a0]))
    V = (a3.deriv().deriv() - 2 * a2.deriv() + Fraction(3, 2) * a3 * a3.deriv()
         - a2 * a3 + a3**3 * Fraction(1, 4) + 2 * a1)
    return U, W, V


def exterior_square_dz(a0, a1, a2, a3) -> DOp:
    """Operator annihilating Y = W(y, ỹ), in d/dz form."""
    a0, a1, a2, a3 = (RatFunc.lift(a) for a in (a0, a1, a2, a3))
    U, W, V = _chain(a0, a1, a2, a3)
    if V.is_zero():
        return W
    # V W' = V^2 U / 2 + (V' - a3 V / 2) W
    return W.diff().lmul(V) - U.lmul(V * V * HALF) - W.lmul(V.deriv() - a3 * V * HALF)


def exterior_square(op: ThetaOperator | DOp) -> ThetaOperator:
    """Canonical theta operator for w = z W(y, ỹ); order 5 iff the (a_i) condition holds."""
    d = theta_to_dz(op) if isinstance(op, ThetaOperator) else op.monic()
    if d.order != 4:
        raise ValueError("exterior square is implemented for order 4")
    LY = exterior_square_dz(*d.c[:4])
    z_inv = RatFunc(Poly((1,)), Poly((0, 1)))
    return dz_to_theta(LY.rmul(z_inv))


def zwronskian(a: LogSeries, b: LogSeries) -> LogSeries:
    """z W(a, b) = a theta(b) - theta(a) b."""
    return a * b.theta() - a.theta() * b


def w_basis(basis: list[LogSeries]) -> list[LogSeries]:
    y0, y1, y2, y3 = basis
    return [zwronskian(y0, y1), zwronskian(y0, y2), zwronskian(y0, y3),
            zwronskian(y1, y3).scale(HALF), zwronskian(y2, y3).scale(HALF)]


def _falling_theta(f: LogSeries, k: int) -> LogSeries:
    """theta(theta-1)...(theta-k+1) f, i.e. z^k f^(k)."""
    out = f
    for i in range(k):
        out = out.theta() - out.scale(i)
    return out


def beukers_expression(w: list[LogSeries], k: int) -> LogSeries:
    """z^{2k} (2 w0^(k) w4^(k) - 2 w1^(k) w3^(k) + (w2^(k))^2)."""
    d = [_falling_theta(x, k) for x in w]
    return (d[0] * d[4]).scale(2) - (d[1] * d[3]).scale(2) + d[2] * d[2]


@dataclass(frozen=True)
class BeukersReport:
    k: int
    log_free: bool
    coeffs: tuple[Fraction, ...]  # coefficients of z^nu, nu = -2k, -2k+1, ...
    c: tuple[Fraction, ...]  # coeffs[nu + 2k] / 9^nu
    integral_upto: int | None  # largest nu with c integral for every index up to it
    closed_form: tuple | None  # (m, numerator coefficients): z^{-2k} P(z) / disc(z)^m

    @property
    def vanishes(self) -> bool:
        return self.log_free and all(a == 0 for a in self.coeffs)

    @property
    def all_integral(self) -> bool:
        return self.log_free and all(x.denominator == 1 for x in self.c)


def beukers_check(w: list[LogSeries], k: int, disc: Poly | None = None) -> BeukersReport:
    """2 w0^(k) w4^(k) - 2 w1^(k) w3^(k) + (w2^(k))^2 for the w basis.

    For k = 0, 1 this should vanish identically. For k >= 2 the expression is
    a single-valued function; its Laurent coefficients are compared against
    powers of 9z, and if ``disc`` is given a closed form z^{-2k} P / disc^m
    with polynomial P is searched by clearing powers of disc.
    """
    e = beukers_expression(w, k)
    if not e.is_analytic():
        return BeukersReport(k, False, (), (), None, None)
    s = e.parts[0]
    coeffs = tuple(s.c)
    c = tuple(a / Fraction(9) ** (n - 2 * k) for n, a in enumerate(coeffs))
    bad = next((n for n, x in enumerate(c) if x.denominator != 1), None)
    upto = (len(c) - 1 - 2 * k) if bad is None else (bad - 1 - 2 * k)
    closed = None
    if disc is not None and not s.is_zero():
        d = PowerSeries(list(disc.c), s.order)
        f = s
        for m in range(0, 4 * k + 2):
            last = max(i for i, a in enumerate(f.c) if a != 0)
            if last < len(f.c) // 2:
                closed = (m, tuple(f.c[: last + 1]))
                break
            f = f * d
    return BeukersReport(k, True, coeffs, c, upto, closed)


def pseudo_coupling(op: ThetaOperator, N: int, N0=1, basis=None):
    """(MirrorData, K, Lambert numbers at weight 2) from w2/w0 of an order 5 or 6 MUM operator."""
    if basis is None:
        basis = frobenius_basis(op, N + 1)
    m = mirror_map(basis)
    K = yukawa(basis, m, N0)
    return m, K, lambert_decompose(K, 2)


def verify_prop5(a: tuple, target: ThetaOperator, corrupt: bool = False) -> bool:
    """Exterior square of the order-4 operator with coefficients a = (a0, a1, a2, a3) equals target."""
    a = [RatFunc.lift(x) for x in a]
    if corrupt:
        a[0] = a[0] + RatFunc(Poly((1,)), Poly((0, 0, 0, 1)))
    d = DOp(a + [RatFunc(Poly((1,)))])
    return exterior_square(d) == target.canonical()
