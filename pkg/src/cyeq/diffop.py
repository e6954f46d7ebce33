"""Linear differential operators in theta and d/dz form, recurrences, Frobenius bases."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd, lcm

from .poly import Poly, RatFunc, falling, poly_gcd
from .series import LogSeries, PowerSeries

THETA = Poly.x()


class NotMUM(ValueError):
    pass


class SingularRecursion(ValueError):
    pass


class SingularStep(ValueError):
    def __init__(self, n: int):
        super().__init__(f"leading recurrence coefficient vanishes at n={n}")
        self.n = n


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b) // poly_gcd(a, b)


class ThetaOperator:
    """sum_i z^i Q_i(theta), theta = z d/dz. ``coeffs[i]`` is Q_i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        qs = [q if isinstance(q, Poly) else Poly(q) for q in coeffs]
        while qs and qs[-1].is_zero():
            qs.pop()
        if not qs:
            raise ValueError("zero operator")
        self.coeffs = tuple(qs)

    @property
    def zdeg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def order(self) -> int:
        return max(q.degree() for q in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, ThetaOperator) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ThetaOperator({self.pretty()})"

    def pretty(self) -> str:
        terms = []
        for i, q in enumerate(self.coeffs):
            if q.is_zero():
                continue
            zp = "" if i == 0 else ("z*" if i == 1 else f"z^{i}*")
            terms.append(f"{zp}({q.pretty('θ')})")
        return " + ".join(terms)

    def __add__(self, other: "ThetaOperator"):
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda op, i: op.coeffs[i] if i < len(op.coeffs) else Poly()
        return ThetaOperator([get(self, i) + get(other, i) for i in range(n)])

    def __neg__(self):
        return ThetaOperator([-q for q in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "ThetaOperator":
        return ThetaOperator([q * a for q in self.coeffs])

    def __mul__(self, other: "ThetaOperator") -> "ThetaOperator":
        """Composition; Q(theta) z^j = z^j Q(theta + j)."""
        if not isinstance(other, ThetaOperator):
            return self.scale(other)
        out = [Poly()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] = out[i + j] + p.shift(j) * q
        return ThetaOperator(out)

    def leading_z0(self) -> Poly:
        return self.coeffs[0]

    def canonical(self) -> "ThetaOperator":
        qs = list(self.coeffs)
        while qs and qs[0].is_zero():
            qs.pop(0)
        den = reduce(lcm, (q.denominator_lcm() for q in qs), 1)
        ints = [[int(a * den) for a in q] for q in qs]
        g = reduce(gcd, (a for row in ints for a in row), 0)
        s = max(q.degree() for q in qs)
        lead = next(row[s] for row in ints if len(row) > s and row[s] != 0)
        if lead < 0:
            g = -g
        return ThetaOperator([Poly([Fraction(a // g) for a in row]) for row in ints])

    def substitute_z(self, c) -> "ThetaOperator":
        """z -> c z."""
        c = Fraction(c)
        return ThetaOperator([q * c**i for i, q in enumerate(self.coeffs)])

    def int_coeffs(self) -> list[list[int]]:
        return [[int(a) if a.denominator == 1 else a for a in q] for q in self.coeffs]


def indicial_polynomial(op: ThetaOperator) -> Poly:
    return op.canonical().coeffs[0]


def is_mum(op: ThetaOperator) -> bool:
    q0 = indicial_polynomial(op)
    s = op.order
    return q0.degree() == s and all(q0[k] == 0 for k in range(s))


def local_exponents(op: ThetaOperator) -> list[Fraction]:
    return indicial_polynomial(op).rational_roots()


def _stirling2(n: int, k: int) -> int:
    return sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1)) // _fact(k)


def _fact(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


class DOp:
    """sum_k c_k(z) D^k with rational-function coefficients, D = d/dz."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = [RatFunc.lift(a) for a in coeffs]
        while len(c) > 1 and c[-1].is_zero():
            c.pop()
        self.c = tuple(c)

    @classmethod
    def identity(cls) -> "DOp":
        return cls([1])

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        g = lambda op, k: op.c[k] if k < len(op.c) else RatFunc(Poly())
        return DOp([g(self, k) + g(other, k) for k in range(n)])

    def __neg__(self):
        return DOp([-a for a in self.c])

    def __sub__(self, other):
        return self + (-other)

    def lmul(self, f) -> "DOp":
        f = RatFunc.lift(f)
        return DOp([f * a for a in self.c])

    def diff(self) -> "DOp":
        """D o L."""
        out = [a.deriv() for a in self.c] + [RatFunc(Poly())]
        for k, a in enumerate(self.c):
            out[k + 1] = out[k + 1] + a
        return DOp(out)

    def rmul(self, f) -> "DOp":
        """L o (multiplication by f)."""
        f = RatFunc.lift(f)
        ders = [f]
        for _ in range(self.order):
            ders.append(ders[-1].deriv())
        out = [RatFunc(Poly())] * len(self.c)
        for k, a in enumerate(self.c):
            for i in range(k + 1):
                out[k - i] = out[k - i] + a * ders[i] * comb(k, i)
        return DOp(out)

    def compose(self, other: "DOp") -> "DOp":
        """self o other."""
        acc = DOp([0])
        power = other
        for a in self.c:
            acc = acc + power.lmul(a)
            power = power.diff()
        return acc

    def monic(self) -> "DOp":
        lc = self.c[-1]
        return DOp([a / lc for a in self.c])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.c)


class DzOperator(DOp):
    """Monic d/dz operator D^s + a_{s-1} D^{s-1} + ... + a_0."""

    @property
    def a(self) -> tuple[RatFunc, ...]:
        return self.c[:-1]


def theta_to_dz(op: ThetaOperator) -> DzOperator:
    """theta^j = sum_k S(j,k) z^k D^k."""
    s = op.order
    polys = [Poly()] * (s + 1)
    for i, q in enumerate(op.coeffs):
        for j, cj in enumerate(q):
            if cj == 0:
                continue
            for k in range(1, j + 1):
                polys[k] = polys[k] + Poly.monomial(i + k, cj * _stirling2(j, k))
            if j == 0:
                polys[0] = polys[0] + Poly.monomial(i, cj)
    lead = polys[s]
    return DzOperator([RatFunc(p, lead) for p in polys])


def equivalent(a: ThetaOperator, b: ThetaOperator) -> bool:
    """Equal up to a left rational-function factor (same monic D-form)."""
    return theta_to_dz(a).c == theta_to_dz(b).c


def dz_to_theta(op: DOp) -> ThetaOperator:
    """Clear denominators, rewrite z^k D^k as falling factorials in theta."""
    den = reduce(_poly_lcm, (a.den for a in op.c), Poly((1,)))
    polys = [a.num * (den // a.den) for a in op.c]
    levels: dict[int, Poly] = {}
    for k, p in enumerate(polys):
        fk = falling(k)
        for e, ce in enumerate(p):
            if ce:
                levels[e - k] = levels.get(e - k, Poly()) + fk * ce
    lo = min(levels)
    hi = max(levels)
    return ThetaOperator([levels.get(e, Poly()) for e in range(lo, hi + 1)]).canonical()


def dz_from_polys(polys) -> DOp:
    """Operator sum_k p_k(z) D^k from polynomial coefficient lists (low first)."""
    return DOp([RatFunc(Poly(p)) for p in polys])


def apply(op: ThetaOperator, f):
    """Apply op to a PowerSeries or LogSeries; the result keeps the input order."""
    ls = f if isinstance(f, LogSeries) else LogSeries([f])
    s = op.order
    powers = [ls]
    for _ in range(s):
        powers.append(powers[-1].theta())
    acc = None
    for i, q in enumerate(op.coeffs):
        term = None
        for j, cj in enumerate(q):
            if cj:
                t = powers[j].scale(cj)
                term = t if term is None else term + t
        if term is None:
            continue
        term = term.shift(i)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = ls.scale(0)
    return acc if isinstance(f, LogSeries) else acc.parts[0]


# truncated arithmetic in Q[rho]/(rho^s)
def _tmul(a, b, s):
    out = [Fraction(0)] * s
    for i, x in enumerate(a):
        if x:
            for j in range(s - i):
                out[i + j] += x * b[j]
    return out


def _tinv(a, s):
    if a[0] == 0:
        raise ZeroDivisionError
    inv0 = 1 / a[0]
    out = [inv0]
    for k in range(1, s):
        acc = sum((a[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(-acc * inv0)
    return out


def _taylor_at(q: Poly, x, s):
    """Coefficients of q(x + rho) in rho up to rho^{s-1}."""
    out = []
    d = q
    fact = 1
    for k in range(s):
        out.append(d(x) / fact if not d.is_zero() else Fraction(0))
        d = d.deriv()
        fact *= k + 1
    return out


def frobenius_basis(op: ThetaOperator, order: int) -> list[LogSeries]:
    """Frobenius basis y_0..y_{s-1} at a MUM point, y_j = sum_k f_{jk} log^k z / k!.

    Coefficients A(n, rho) of z^{n+rho} are computed in Q[rho]/(rho^s) with
    A(0, rho) = 1; y_j collects the rho^j coefficient of A(n, rho) z^rho.
    """
    op = op.canonical()
    if not is_mum(op):
        raise NotMUM("indicial polynomial is not c*theta^s")
    s = op.order
    qs = op.coeffs
    A = [[Fraction(1)] + [Fraction(0)] * (s - 1)]
    for n in range(1, order + 1):
        acc = [Fraction(0)] * s
        for i in range(1, min(n, len(qs) - 1) + 1):
            if qs[i].is_zero():
                continue
            t = _tmul(_taylor_at(qs[i], n - i, s), A[n - i], s)
            acc = [x + y for x, y in zip(acc, t)]
        lead = _taylor_at(qs[0], n, s)
        if lead[0] == 0:
            raise SingularRecursion(f"Q_0 vanishes at n={n}")
        A.append([-x for x in _tmul(acc, _tinv(lead, s), s)])
    # column series: g_m = sum_n A(n)[m] z^n
    cols = [PowerSeries([A[n][m] for n in range(order + 1)]) for m in range(s)]
    basis = []
    for j in range(s):
        basis.append(LogSeries([cols[j - k] for k in range(j + 1)]))
    return basis


class Recurrence:
    """sum_i Q_i(n - i) A_{n-i} = 0 for all n >= start (A_k = 0 for k < 0).

    With ``start=0`` this is exactly the coefficient recurrence of the theta
    operator sum_i z^i Q_i(theta) acting on sum_n A_n z^n.
    """

    __slots__ = ("polys", "start")

    def __init__(self, polys, start: int = 0):
        ps = [p if isinstance(p, Poly) else Poly(p) for p in polys]
        while len(ps) > 1 and ps[-1].is_zero():
            ps.pop()
        self.polys = tuple(ps)
        self.start = start

    @property
    def depth(self) -> int:
        return len(self.polys) - 1

    @classmethod
    def from_shift_form(cls, coeffs, start: int = 0) -> "Recurrence":
        """From sum_j c_j(n) A_{n+j} = 0 valid for n >= start."""
        m = len(coeffs) - 1
        cs = [c if isinstance(c, Poly) else Poly(c) for c in coeffs]
        polys = [cs[m - i].shift(-(m - i)) for i in range(m + 1)]
        return cls(polys, start + m)

    def shift_form(self) -> list[Poly]:
        """c_j(n) with sum_j c_j(n) A_{n+j} = 0 for n >= start - depth."""
        m = self.depth
        return [self.polys[m - j].shift(j) for j in range(m + 1)]

    def residual(self, values, n: int) -> Fraction:
        acc = Fraction(0)
        for i, q in enumerate(self.polys):
            if n - i >= 0:
                acc += q(n - i) * values[n - i]
        return acc

    def check(self, values, upto: int | None = None) -> list[int]:
        """Indices n (>= start, within range) where the relation fails."""
        top = len(values) - 1 if upto is None else upto
        return [n for n in range(max(self.start, 0), top + 1) if self.residual(values, n) != 0]

    def canonical(self) -> "Recurrence":
        op = operator_from_recurrence(self).canonical()
        return Recurrence(op.coeffs, self.start)


def recurrence_from_operator(op: ThetaOperator) -> Recurrence:
    return Recurrence(op.coeffs, 0)


def operator_from_recurrence(rec: Recurrence) -> ThetaOperator:
    return ThetaOperator(rec.polys)


def unroll(rec: Recurrence, initial, N: int) -> list[Fraction]:
    """Values A_0..A_{N-1}; initial values seed the first indices."""
    vals = [Fraction(v) for v in initial]
    q0 = rec.polys[0]
    for n in range(len(vals), N):
        if n < rec.start:
            raise ValueError(f"need an initial value for index {n}")
        lead = q0(n)
        if lead == 0:
            raise SingularStep(n)
        acc = Fraction(0)
        for i in range(1, len(rec.polys)):
            if n - i >= 0:
                acc += rec.polys[i](n - i) * vals[n - i]
        vals.append(-acc / lead)
    return vals[:N]


def sequence_from_operator(op: ThetaOperator, N: int) -> list[Fraction]:
    """Analytic solution coefficients A_0..A_{N-1} with A_0 = 1."""
    return unroll(recurrence_from_operator(op.canonical()), [1], N)


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix, by exact elimination."""
    m = []
    for r in rows:
        d = reduce(lcm, (Fraction(x).denominator for x in r), 1)
        ir = [int(Fraction(x) * d) for x in r]
        g = reduce(gcd, ir, 0)
        if g:
            m.append([x // g for x in ir])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f, pc = m[r][col], p[col]
                nr = [pc * x - f * y for x, y in zip(m[r], p)]
                g = reduce(gcd, nr, 0)
                m[r] = [x // g for x in nr] if g else nr
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = Fraction(-m[r][f], m[r][pc])
        basis.append(v)
    return basis


def fit_operator(values, order: int, zdeg: int, extra: int = 12) -> list[ThetaOperator]:
    """All theta operators of bounded order and z-degree annihilating sum A_n z^n.

    Returns a basis of the solution space (canonical forms); empty if none.
    Uses the coefficient equations for n = 0..len(values)-1.
    """
    vals = [Fraction(v) for v in values]
    nunk = (order + 1) * (zdeg + 1)
    if len(vals) < nunk + extra:
        raise ValueError(f"need at least {nunk + extra} terms, got {len(vals)}")
    rows = []
    for n in range(len(vals)):
        row = []
        for i in range(zdeg + 1):
            for j in range(order + 1):
                row.append(Fraction((n - i) ** j) * vals[n - i] if n - i >= 0 else Fraction(0))
        rows.append(row)
    ker = nullspace(rows, nunk)
    ops = []
    for v in ker:
        qs = [Poly(v[i * (order + 1):(i + 1) * (order + 1)]) for i in range(zdeg + 1)]
        ops.append(ThetaOperator(qs).canonical())
    return ops


def find_operator(values, order: int, max_zdeg: int = 12, extra: int = 12) -> ThetaOperator | None:
    """Smallest z-degree operator of the given order annihilating the values."""
    for d in range(1, max_zdeg + 1):
        need = (order + 1) * (d + 1) + extra
        if need > len(values):
            break
        sols = fit_operator(values[:need], order, d, extra)
        sols = [s for s in sols if s.order == order]
        if len(sols) == 1:
            return sols[0]
        if len(sols) > 1:
            # several: z-shifted copies of a smaller one cannot occur at minimal degree,
            # so this means the data underdetermines the fit
            raise ValueError(f"{len(sols)} independent operators at z-degree {d}")
    return None
