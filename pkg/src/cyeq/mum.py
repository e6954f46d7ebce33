"""Mirror map, Yukawa coupling and instanton numbers at a MUM point."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import divisors, mobius
from .diffop import ThetaOperator, frobenius_basis, theta_to_dz
from .poly import Poly, RatFunc
from .series import (LogSeries, PowerSeries, ps_compose, ps_exp, ps_integrate,
                     ps_reciprocal, ps_revert, ps_theta)


class NonExpandablePrefactor(ValueError):
    pass


class FractionalPowersPresent(ValueError):
    pass


@dataclass(frozen=True)
class MirrorData:
    t_series: PowerSeries  # t - log z, analytic part
    q_over_z: PowerSeries
    z_over_q: PowerSeries  # z(q)/q

    def z_of_q(self) -> PowerSeries:
        return self.z_over_q.shift(1) if self.z_over_q.order >= 1 else self.z_over_q


@dataclass(frozen=True)
class LambertSeries:
    weight: int
    N0: Fraction
    coeffs: tuple[Fraction, ...]  # N_1, N_2, ...

    def is_integral(self) -> bool:
        return all(Fraction(n).denominator == 1 for n in self.coeffs)

    def first_nonintegral(self) -> int | None:
        return next((l + 1 for l, n in enumerate(self.coeffs) if Fraction(n).denominator != 1), None)


def condition22(op: ThetaOperator):
    """Whether 2 a1 - a2 a3 + a3^3/4 - 2 a2' + 3/2 a3 a3' + a3'' vanishes; returns (bool, residual)."""
    d = theta_to_dz(op)
    if d.order != 4:
        raise ValueError("condition applies to fourth-order operators")
    a0, a1, a2, a3 = d.a
    res = (2 * a1 - a2 * a3 + a3**3 * Fraction(1, 4) - 2 * a2.deriv()
           + Fraction(3, 2) * a3 * a3.deriv() + a3.deriv().deriv())
    return res.is_zero(), res


def mirror_map(basis: list[LogSeries]) -> MirrorData:
    y0 = basis[0].parts[0]
    y1 = basis[1]
    if not y1.part(1) == y0:
        raise ValueError("basis is not in Frobenius normal form")
    tau = y1.parts[0] / y0
    qz = ps_exp(tau)
    zq = ps_revert(qz.shift(1))
    return MirrorData(tau, qz, zq.unshift(1))


def second_t_derivative(basis: list[LogSeries], mirror: MirrorData) -> PowerSeries:
    """d^2/dt^2 (y2/y0) as a series in z, with t = log z + tau(z)."""
    y0 = basis[0].parts[0]
    T2 = basis[2] / y0
    th_t = ps_theta(mirror.t_series) + 1
    th2_t = ps_theta(th_t)
    dT2 = T2.theta()
    ddT2 = dT2.theta()
    # (theta t * theta^2 T2 - theta^2 t * theta T2) / (theta t)^3
    num = ddT2 * th_t - dT2 * th2_t
    k = num / (th_t * th_t * th_t)
    if not k.is_analytic():
        raise ValueError("second t-derivative picked up log terms")
    return k.parts[0]


def yukawa(basis: list[LogSeries], mirror: MirrorData, N0=1, N: int | None = None) -> PowerSeries:
    """K(q) = N0 d^2/dt^2 (y2/y0) expressed in q = e^t."""
    kz = second_t_derivative(basis, mirror)
    zq = mirror.z_of_q()
    n = min(kz.order, zq.order) if N is None else N
    out = ps_compose(kz.truncate(n), zq.truncate(n)) * Fraction(N0)
    return out


def yukawa_in_z(basis, mirror, N0=1) -> PowerSeries:
    return second_t_derivative(basis, mirror) * Fraction(N0)


def laurent(f: RatFunc, order: int):
    """(v, s) with f = z^v s(z), s a unit power series to the given order."""
    vn = f.num.valuation()
    vd = f.den.valuation()
    num = Poly(f.num.c[vn:])
    den = Poly(f.den.c[vd:])
    s = PowerSeries(list(num.c), order) / PowerSeries(list(den.c), order)
    return vn - vd, s


def yukawa_via_a3(op: ThetaOperator, N: int, N0=1) -> PowerSeries:
    """N0 exp(-1/2 int a3) / (y0^2 t'^3) expanded in z, normalized to N0 at z = 0."""
    d = theta_to_dz(op)
    a3 = d.a[3]
    v, s = laurent(a3, N + 1)
    if v < -1:
        raise NonExpandablePrefactor("a3 has a pole of order > 1 at 0")
    if v == -1:
        r = s[0]
        analytic = (s - r).unshift(1) if s.order >= 1 else PowerSeries.zero(0)
    else:
        r = Fraction(0)
        analytic = s.shift(v)
    # exp(-1/2 int a3) = z^{-r/2} exp(-1/2 int analytic)
    pref = ps_exp(ps_integrate(analytic.truncate(N - 1)) * Fraction(-1, 2))
    # t' = theta t / z, so the z-power of the whole expression is 3 - r/2
    e = 3 - r / 2
    if e.denominator != 1 or e < 0:
        raise NonExpandablePrefactor(f"prefactor carries z^{e}")
    basis = frobenius_basis(op, N)
    y0 = basis[0].parts[0]
    m = mirror_map(basis)
    th_t = ps_theta(m.t_series) + 1
    out = pref * ps_reciprocal(y0 * y0 * th_t * th_t * th_t)
    return out.shift(int(e)) * Fraction(N0)


def lambert_decompose(K: PowerSeries, weight: int = 3, N0=None) -> LambertSeries:
    """K = N0 + sum_l N_l l^w q^l/(1-q^l); N0 defaults to K(0)."""
    N0 = K[0] if N0 is None else Fraction(N0)
    out = []
    for l in range(1, K.order + 1):
        s = sum(mobius(l // d) * K[d] for d in divisors(l))
        out.append(Fraction(s) / l**weight)
    return LambertSeries(weight, N0, tuple(out))


def lambert_in_z(f: PowerSeries, weight: int) -> LambertSeries:
    """Lambert decomposition of f - f(0) viewed as a series in z."""
    return lambert_decompose(f - f[0], weight, N0=f[0])


def auto_n0(K: PowerSeries, weight: int = 3, limit: int = 10**6) -> int:
    """Smallest positive integer scaling making every Lambert number integral."""
    lam = lambert_decompose(K, weight)
    den = 1
    for n in lam.coeffs:
        d = Fraction(n).denominator
        from math import lcm
        den = lcm(den, d)
        if den > limit:
            raise ValueError("no small integral normalization")
    return den


def instanton_numbers(K: PowerSeries, weight: int = 3, N0="one") -> LambertSeries:
    """Scale K to K(0) = N0 (an int, 'one' meaning K as given, or 'auto') and decompose."""
    if N0 == "auto":
        c = auto_n0(K / K[0], weight)
        K = K / K[0] * c
    elif N0 != "one":
        K = K / K[0] * Fraction(N0)
    return lambert_decompose(K, weight)


def prop2_check(basis: list[LogSeries]) -> LogSeries:
    """z (W(y0,y3) - W(y1,y2)), zero iff the Wronskian relation holds."""
    def zw(a, b):
        return a * b.theta() - a.theta() * b
    return zw(basis[0], basis[3]) - zw(basis[1], basis[2])


def rescale_coupling(K: PowerSeries, c, m: int = 1) -> PowerSeries:
    """K((c q)^{1/m}) as a series in q: output_n = K_{mn} c^n.

    Nonzero coefficients at exponents not divisible by m are rejected.
    """
    c = Fraction(c)
    if m <= 0:
        raise ValueError("m must be positive")
    for k in range(1, K.order + 1):
        if k % m and K[k] != 0:
            raise FractionalPowersPresent(f"coefficient {k} is nonzero but not divisible by {m}")
    return PowerSeries([K[m * n] * c**n for n in range(K.order // m + 1)])
