"""Exact truncated power series and log-polynomial series over Q.

A ``PowerSeries`` of order N knows its coefficients of z^0..z^N exactly.
A ``LogSeries`` is a finite sum f_0 + f_1 L + f_2 L^2/2! + ... with L = log z
and every f_j a PowerSeries of a common order.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, lcm


class SeriesError(ValueError):
    pass


class ZeroConstantTerm(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class NonzeroInnerConstant(SeriesError):
    pass


class NotInvertible(SeriesError):
    pass


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _as_ints(coeffs):
    d = reduce(lcm, (a.denominator for a in coeffs), 1)
    return [a.numerator * (d // a.denominator) for a in coeffs], d


class PowerSeries:
    __slots__ = ("c",)

    def __init__(self, coeffs, order: int | None = None):
        c = [_fr(a) for a in coeffs]
        if order is not None:
            c = (c + [Fraction(0)] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise SeriesError("a power series needs at least one coefficient")
        self.c = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def z(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k):
        return self.c[k]

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __repr__(self):
        head = ", ".join(str(a) for a in self.c[:8])
        more = ", ..." if len(self.c) > 8 else ""
        return f"PowerSeries([{head}{more}], order={self.order})"

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.c[: order + 1])

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c)

    def valuation(self) -> int | None:
        for k, a in enumerate(self.c):
            if a != 0:
                return k
        return None

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.c)

    def ints(self) -> list[int]:
        if not self.is_integral():
            raise SeriesError("series has non-integer coefficients")
        return [a.numerator for a in self.c]

    def __neg__(self):
        return PowerSeries([-a for a in self.c])

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(len(self.c), len(other.c))
            return PowerSeries([self.c[k] + other.c[k] for k in range(n)])
        c = list(self.c)
        c[0] += _fr(other)
        return PowerSeries(c)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        a = _fr(other)
        return PowerSeries([a * x for x in self.c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, ps_reciprocal(other))
        a = _fr(other)
        return PowerSeries([x / a for x in self.c])

    def __rtruediv__(self, other):
        return ps_reciprocal(self) * other

    def __pow__(self, e: int):
        if e < 0:
            return ps_reciprocal(self) ** (-e)
        out = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by z^k keeping the order."""
        if k == 0:
            return self
        return PowerSeries([Fraction(0)] * k + list(self.c[: len(self.c) - k]), self.order)

    def unshift(self, k: int) -> "PowerSeries":
        """Divide by z^k; the first k coefficients must vanish. Order drops by k."""
        if any(a != 0 for a in self.c[:k]):
            raise SeriesError(f"series is not divisible by z^{k}")
        if k > self.order:
            raise SeriesError("no coefficients left after division")
        return PowerSeries(self.c[k:])

    def derive(self) -> "PowerSeries":
        return ps_derive(self)

    def theta(self) -> "PowerSeries":
        return ps_theta(self)

    def __call__(self, inner: "PowerSeries") -> "PowerSeries":
        return ps_compose(self, inner)

    def scale_var(self, s) -> "PowerSeries":
        """f(s z)."""
        s = _fr(s)
        return PowerSeries([a * s**k for k, a in enumerate(self.c)])


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    # convolve integer numerators over common denominators; much faster than Fraction sums
    x, dx = _as_ints(a.c[: n + 1])
    y, dy = _as_ints(b.c[: n + 1])
    out = [0] * (n + 1)
    for i, xi in enumerate(x):
        if xi:
            for j in range(n + 1 - i):
                out[i + j] += xi * y[j]
    d = dx * dy
    return PowerSeries([Fraction(v, d) for v in out])


def ps_reciprocal(f: PowerSeries) -> PowerSeries:
    if f.c[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    n = f.order
    inv0 = 1 / f.c[0]
    g = [inv0]
    for k in range(1, n + 1):
        s = sum((f.c[j] * g[k - j] for j in range(1, k + 1)), Fraction(0))
        g.append(-s * inv0)
    return PowerSeries(g)


def ps_derive(f: PowerSeries) -> PowerSeries:
    """d/dz; the order drops by one."""
    if f.order == 0:
        raise SeriesError("derivative of an order-0 series has no known coefficients")
    return PowerSeries([k * f.c[k] for k in range(1, len(f.c))])


def ps_integrate(f: PowerSeries, const=0) -> PowerSeries:
    return PowerSeries([_fr(const)] + [f.c[k] / (k + 1) for k in range(len(f.c))])


def ps_theta(f: PowerSeries) -> PowerSeries:
    return PowerSeries([k * a for k, a in enumerate(f.c)])


def ps_exp(f: PowerSeries) -> PowerSeries:
    if f.c[0] != 0:
        raise BadConstantTerm("exp needs a zero constant term")
    # g' = f' g  <=>  n g_n = sum_k k f_k g_{n-k}
    n = f.order
    g = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((k * f.c[k] * g[m - k] for k in range(1, m + 1)), Fraction(0))
        g.append(s / m)
    return PowerSeries(g)


def ps_log(f: PowerSeries) -> PowerSeries:
    if f.c[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    # theta(log f) = theta(f) / f
    t = ps_theta(f) / f
    return PowerSeries([Fraction(0)] + [t.c[k] / k for k in range(1, len(t.c))])


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(z)) for g(0) = 0."""
    if g.c[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    out = PowerSeries.zero(n)
    for a in reversed(f.c[: n + 1]):
        out = out * g + a
    return out


def ps_revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse g with f(g(z)) = z, by Lagrange inversion."""
    if f.c[0] != 0 or f.order < 1 or f.c[1] == 0:
        raise NotInvertible("reversion needs f(0) = 0 and f'(0) != 0")
    n = f.order
    h = ps_reciprocal(f.unshift(1))  # z/f(z), order n-1
    g = [Fraction(0)]
    p = PowerSeries.one(n - 1)
    for k in range(1, n + 1):
        p = p * h
        g.append(p.c[k - 1] / k)
    return PowerSeries(g)


def ps_nth_root(f: PowerSeries, m: int) -> PowerSeries:
    """The m-th root with constant term 1; check ``is_integral`` on the result."""
    if m <= 0:
        raise SeriesError("root index must be positive")
    if f.c[0] != 1:
        raise BadConstantTerm("m-th root needs constant term 1")
    # g^m = f  <=>  f theta(g) = (1/m) g theta(f)
    n = f.order
    g = [Fraction(1)]
    inv_m = Fraction(1, m)
    for k in range(1, n + 1):
        # sum_{j} f_{k-j} j g_j = inv_m sum_j g_j (k-j) f_{k-j}
        rhs = inv_m * sum((g[j] * (k - j) * f.c[k - j] for j in range(k)), Fraction(0))
        lhs_rest = sum((f.c[k - j] * j * g[j] for j in range(1, k)), Fraction(0))
        g.append((rhs - lhs_rest) / k)
    return PowerSeries(g)


def largest_integral_root(f: PowerSeries, limit: int | None = None) -> int:
    """Largest m with f^(1/m) in Z[[z]] to the known order (1 if none larger).

    If f = g^m with g integral then m divides the first nonzero non-constant
    coefficient, so only divisors of it need checking.
    """
    if f.c[0] != 1 or not f.is_integral():
        return 1
    v = next((k for k in range(1, len(f.c)) if f.c[k] != 0), None)
    if v is None:
        return 1
    a = abs(f.c[v].numerator)
    from .arithmetic import divisors
    cands = divisors(a)[::-1]
    for m in cands:
        if limit is not None and m > limit:
            continue
        if ps_nth_root(f, m).is_integral():
            return m
    return 1


class LogSeries:
    """sum_j parts[j] * log(z)^j / j!"""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = list(parts)
        if not parts:
            raise SeriesError("empty log series")
        n = min(p.order for p in parts)
        self.parts = tuple(p.truncate(n) if p.order > n else p for p in parts)

    @classmethod
    def analytic(cls, f: PowerSeries) -> "LogSeries":
        return cls([f])

    @property
    def order(self) -> int:
        return self.parts[0].order

    @property
    def log_degree(self) -> int:
        for j in range(len(self.parts) - 1, -1, -1):
            if not self.parts[j].is_zero():
                return j
        return 0

    def part(self, j: int) -> PowerSeries:
        if j < len(self.parts):
            return self.parts[j]
        return PowerSeries.zero(self.order)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def is_analytic(self) -> bool:
        return all(p.is_zero() for p in self.parts[1:])

    def truncate(self, order: int) -> "LogSeries":
        return LogSeries([p.truncate(order) for p in self.parts])

    def __repr__(self):
        return f"LogSeries(order={self.order}, log_degree={self.log_degree}, head={[str(a) for a in self.parts[0].c[:5]]})"

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        k = max(len(self.parts), len(other.parts))
        n = min(self.order, other.order)
        return all(self.part(j).truncate(n) == other.part(j).truncate(n) for j in range(k))

    def __neg__(self):
        return LogSeries([-p for p in self.parts])

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            other = LogSeries([other])
        k = max(len(self.parts), len(other.parts))
        return LogSeries([self.part(j) + other.part(j) for j in range(k)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LogSeries):
            k = len(self.parts) + len(other.parts) - 1
            out = []
            for m in range(k):
                acc = PowerSeries.zero(min(self.order, other.order))
                for i in range(max(0, m - len(other.parts) + 1), min(m, len(self.parts) - 1) + 1):
                    acc = acc + comb(m, i) * (self.parts[i] * other.parts[m - i])
                out.append(acc)
            return LogSeries(out)
        return LogSeries([p * other for p in self.parts])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            inv = ps_reciprocal(other)
            return LogSeries([p * inv for p in self.parts])
        return LogSeries([p / other for p in self.parts])

    def theta(self) -> "LogSeries":
        k = len(self.parts)
        return LogSeries([ps_theta(self.parts[j]) + (self.parts[j + 1] if j + 1 < k else 0)
                          for j in range(k)])

    def shift(self, k: int) -> "LogSeries":
        return LogSeries([p.shift(k) for p in self.parts])

    def scale(self, a) -> "LogSeries":
        return LogSeries([p * a for p in self.parts])
