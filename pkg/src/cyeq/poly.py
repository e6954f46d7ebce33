"""Dense univariate polynomials and rational functions over Q."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class Poly:
    """Polynomial with Fraction coefficients, stored low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            self.c = coeffs.c
            return
        if not isinstance(coeffs, (list, tuple)):
            coeffs = (coeffs,)
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, a) -> "Poly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a=1) -> "Poly":
        return cls((0,) * k + (a,))

    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> Fraction:
        return self.c[-1] if self.c else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({[str(a) for a in self.c]})"

    def __str__(self):
        return self.pretty("x")

    def pretty(self, var: str = "x") -> str:
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            a = self.c[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            a = abs(a)
            if k == 0:
                body = str(a)
            else:
                mon = var if k == 1 else f"{var}^{k}"
                body = mon if a == 1 else f"{a}*{mon}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __neg__(self):
        return Poly(tuple(-a for a in self.c))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly(other)
        n = max(len(self.c), len(other.c))
        return Poly(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            a = _frac(other)
            return Poly(tuple(a * x for x in self.c))
        if not self.c or not other.c:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, a):
        a = _frac(a)
        return Poly(tuple(x / a for x in self.c))

    def __pow__(self, e: int):
        out = Poly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, v):
        # Horner; v may be a number, a Poly, or anything supporting * and +
        if isinstance(v, (int, Fraction)):
            acc = Fraction(0)
            for a in reversed(self.c):
                acc = acc * v + a
            return acc
        acc = Poly() if isinstance(v, Poly) else 0
        for a in reversed(self.c):
            acc = acc * v + a
        return acc

    def deriv(self) -> "Poly":
        return Poly(tuple(k * self.c[k] for k in range(1, len(self.c))))

    def shift(self, a) -> "Poly":
        """p(x + a)."""
        return self(Poly((a, 1)))

    def scale_var(self, s) -> "Poly":
        """p(s*x)."""
        s = _frac(s)
        return Poly(tuple(a * s**k for k, a in enumerate(self.c)))

    def mul_xk(self, k: int) -> "Poly":
        return Poly((0,) * k + self.c) if self.c else Poly()

    def valuation(self) -> int:
        for k, a in enumerate(self.c):
            if a != 0:
                return k
        return -1

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(r) - len(other.c)
        if dq < 0:
            return Poly(), self
        q = [Fraction(0)] * (dq + 1)
        lc = other.c[-1]
        for k in range(dq, -1, -1):
            t = r[k + len(other.c) - 1] / lc
            q[k] = t
            if t:
                for j, b in enumerate(other.c):
                    r[k + j] -= t * b
        return Poly(q), Poly(r[: len(other.c) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def denominator_lcm(self) -> int:
        return reduce(lcm, (a.denominator for a in self.c), 1)

    def integer_coeffs(self) -> list[int]:
        d = self.denominator_lcm()
        return [int(a * d) for a in self.c]

    def primitive(self) -> "Poly":
        """Integer primitive part with positive leading coefficient."""
        if not self.c:
            return self
        ints = self.integer_coeffs()
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Poly(tuple(Fraction(a // g) for a in ints))

    def monic(self) -> "Poly":
        return self / self.lc() if self.c else self

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.c)

    def rational_roots(self) -> list[Fraction]:
        """Distinct rational roots, by the rational root test on the primitive part."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        p = self.primitive()
        roots = []
        v = p.valuation()
        if v > 0:
            roots.append(Fraction(0))
            p = Poly(p.c[v:])
        if p.degree() <= 0:
            return roots
        a0, an = abs(int(p.c[0])), abs(int(p.c[-1]))
        for num in _divisors(a0):
            for den in _divisors(an):
                for s in (1, -1):
                    r = Fraction(s * num, den)
                    if r not in roots and p(r) == 0:
                        roots.append(r)
        return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return out


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low first)."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        k = len(r) - 1 - db
        t = r[-1]
        r = [x * lb for x in r]
        for j, bj in enumerate(b):
            r[k + j] -= t * bj
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(gcd, a, 0)
    if g == 0:
        return a
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the primitive remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    x = _int_primitive(a.integer_coeffs())
    y = _int_primitive(b.integer_coeffs())
    if len(x) < len(y):
        x, y = y, x
    while y and len(y) > 1:
        r = _int_prem(x, y)
        x, y = y, (_int_primitive(r) if r else [])
    if not y:
        return Poly(x).monic()
    return Poly((1,))


class RatFunc:
    """Reduced quotient num/den of polynomials, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = num if isinstance(num, Poly) else Poly(num)
        den = Poly((1,)) if den is None else (den if isinstance(den, Poly) else Poly(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly((1,))
            return
        if not _reduced and den.degree() > 0:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lc = den.lc()
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    @classmethod
    def lift(cls, v) -> "RatFunc":
        return v if isinstance(v, RatFunc) else cls(v)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def __eq__(self, other):
        other = RatFunc.lift(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num.pretty('z')} / {self.den.pretty('z')})"

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = RatFunc.lift(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        da, db = self.den // g, other.den // g
        return RatFunc(self.num * db + other.num * da, self.den * db)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RatFunc.lift(other))

    def __rsub__(self, other):
        return RatFunc.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num * other, self.den, _reduced=True) if other else RatFunc(Poly())
        other = RatFunc.lift(other)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        return RatFunc((self.num // g1) * (other.num // g2),
                       (self.den // g2) * (other.den // g1), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * RatFunc.lift(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    def deriv(self) -> "RatFunc":
        return RatFunc(self.num.deriv() * self.den - self.num * self.den.deriv(), self.den**2)

    def __call__(self, v):
        return self.num(v) / self.den(v)


def falling(k: int) -> Poly:
    """x(x-1)...(x-k+1)."""
    out = Poly((1,))
    for i in range(k):
        out = out * Poly((-i, 1))
    return out
