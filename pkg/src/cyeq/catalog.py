"""Named operators and closed-form sequences used throughout the package.

Operators are transcribed as theta polynomials; sequences are exact
generators returning A_0..A_{N-1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .diffop import THETA as T, DOp, ThetaOperator, dz_from_polys, dz_to_theta
from .poly import Poly, RatFunc
from .transforms import rbinom


class UnknownCase(KeyError):
    pass


class NoClosedFormSequence(ValueError):
    pass


def _seq(f: Callable[[int], object]) -> Callable[[int], list[Fraction]]:
    return lambda N: [Fraction(f(n)) for n in range(N)]


def _legendre(c, a):
    """c^n sum_k (-1)^k binom(-1-a, k) binom(a, n-k)^2."""
    a = Fraction(a)
    return lambda n: c**n * sum((-1) ** k * rbinom(-1 - a, k) * rbinom(a, n - k) ** 2 for k in range(n + 1))


def _klm(c, a, b):
    """(-c)^n sum_k (-1)^k binom(a, k) binom(b, n-k) binom(n, k).

    The sign (-1)^n matches the operators theta^2 - c' z (2theta+1) - ...;
    without it the sum solves the z -> -z reflected operator.
    """
    return lambda n: (-c) ** n * sum((-1) ** k * rbinom(a, k) * rbinom(b, n - k) * comb(n, k)
                                     for k in range(n + 1))


def _sq(c, a, b):
    """c^n sum_k binom(a, k)^2 binom(b, n-k)^2."""
    return lambda n: c**n * sum(rbinom(a, k) ** 2 * rbinom(b, n - k) ** 2 for k in range(n + 1))


def _cb(n):
    return comb(2 * n, n)


def _f(n):
    return sum((-1) ** k * 3 ** (n - 3 * k) * comb(n, 3 * k) * factorial(3 * k) // factorial(k) ** 3
               for k in range(n // 3 + 1))


def _delta(n):
    return sum((-1) ** k * 3 ** (n - 3 * k) * comb(n, 3 * k) * comb(n + k, k)
               * factorial(3 * k) // factorial(k) ** 3 for k in range(n // 3 + 1))


def _four(c, a, b, d, e):
    """c^n binom(2n,n) sum_k binom(a,k) binom(b,k) binom(d,n-k) binom(e,n-k)."""
    return lambda n: c**n * _cb(n) * sum(rbinom(a, k) * rbinom(b, k) * rbinom(d, n - k) * rbinom(e, n - k)
                                         for k in range(n + 1))


def _pochs(params, k):
    out = Fraction(1)
    for p in params:
        for i in range(k):
            out *= p + i
    return out


def _zeta4(n):
    return sum(comb(n, j) ** 2 * comb(n, k) ** 2 * comb(n + j, n) * comb(n + k, n) * comb(j + k, n)
               for j in range(n + 1) for k in range(n + 1))


F = Fraction

# second-order operators theta^2 - z P - c z^2 (theta+1)^2 and first-order hypergeometric ones
SECOND_ORDER = {
    "a": ThetaOperator([T**2, -(7 * T**2 + 7 * T + 2), -8 * (T + 1) ** 2]),
    "b": ThetaOperator([T**2, -(11 * T**2 + 11 * T + 3), -(T + 1) ** 2]),
    "c": ThetaOperator([T**2, -(10 * T**2 + 10 * T + 3), 9 * (T + 1) ** 2]),
    "d": ThetaOperator([T**2, -4 * (3 * T**2 + 3 * T + 1), 32 * (T + 1) ** 2]),
    "e": ThetaOperator([T**2, -4 * (8 * T**2 + 8 * T + 3), 256 * (T + 1) ** 2]),
    "f": ThetaOperator([T**2, -3 * (3 * T**2 + 3 * T + 1), 27 * (T + 1) ** 2]),
    "g": ThetaOperator([T**2, -(17 * T**2 + 17 * T + 6), 72 * (T + 1) ** 2]),
    "h": ThetaOperator([T**2, -3 * (18 * T**2 + 18 * T + 7), 729 * (T + 1) ** 2]),
    "i": ThetaOperator([T**2, -4 * (32 * T**2 + 32 * T + 13), 4096 * (T + 1) ** 2]),
    "j": ThetaOperator([T**2, -12 * (72 * T**2 + 72 * T + 31), 186624 * (T + 1) ** 2]),
    "k": ThetaOperator([T**2, -3 * (2 * T + 1), -81 * (T + 1) ** 2]),
    "l": ThetaOperator([T**2, -4 * (2 * T + 1), -64 * (T + 1) ** 2]),
    "m": ThetaOperator([T**2, -24 * (2 * T + 1), -1296 * (T + 1) ** 2]),
    "n": ThetaOperator([T**2, Poly(), -16 * (T + 1) ** 2]),
    "A": ThetaOperator([T**2, -4 * (2 * T + 1) ** 2]),
    "B": ThetaOperator([T**2, -3 * (3 * T + 1) * (3 * T + 2)]),
    "C": ThetaOperator([T**2, -4 * (4 * T + 1) * (4 * T + 3)]),
    "D": ThetaOperator([T**2, -12 * (6 * T + 1) * (6 * T + 5)]),
}

SECOND_ORDER_SEQ = {
    "a": _seq(lambda n: sum(comb(n, k) ** 3 for k in range(n + 1))),
    "b": _seq(lambda n: sum(comb(n, k) ** 2 * comb(n + k, k) for k in range(n + 1))),
    "c": _seq(lambda n: sum(comb(n, k) ** 2 * _cb(k) for k in range(n + 1))),
    "d": _seq(lambda n: sum(comb(n, k) * _cb(k) * _cb(n - k) for k in range(n + 1))),
    "e": _seq(lambda n: sum(4 ** (n - k) * _cb(k) ** 2 * _cb(n - k) for k in range(n + 1))),
    "f": _seq(_f),
    "h": _seq(_legendre(27, F(-1, 3))),
    "i": _seq(_legendre(64, F(-1, 4))),
    "j": _seq(_legendre(432, F(-1, 6))),
    "k": _seq(_klm(9, F(-1, 3), F(-2, 3))),
    "l": _seq(_klm(8, F(-1, 4), F(-3, 4))),
    "m": _seq(_klm(36, F(-1, 6), F(-5, 6))),
    "n": _seq(_klm(4, F(-1, 2), F(-1, 2))),
    "A": _seq(lambda n: _cb(n) ** 2),
    "B": _seq(lambda n: factorial(3 * n) // factorial(n) ** 3),
    "C": _seq(lambda n: factorial(4 * n) // (factorial(n) ** 2 * factorial(2 * n))),
    "D": _seq(lambda n: factorial(6 * n) // (factorial(n) * factorial(2 * n) * factorial(3 * n))),
}

# third-order operators theta^3 - z(2theta+1)P + c z^2 (theta+1)^3, stored as (P, c)
THIRD_ORDER_DATA = {
    "alpha": (2 * (5 * T**2 + 5 * T + 2), 64),
    "beta": (8 * (2 * T**2 + 2 * T + 1), 256),
    "gamma": (17 * T**2 + 17 * T + 5, 1),
    "delta": (7 * T**2 + 7 * T + 3, 81),
    "epsilon": (4 * (3 * T**2 + 3 * T + 1), 16),
    "zeta": (3 * (3 * T**2 + 3 * T + 1), -27),
    "eta": (11 * T**2 + 11 * T + 5, 125),
    "vartheta": (8 * (8 * T**2 + 8 * T + 5), 4096),
    "iota": (3 * (9 * T**2 + 9 * T + 5), 729),
    "kappa": (24 * (18 * T**2 + 18 * T + 13), 186624),
}
THIRD_ORDER = {k: ThetaOperator([T**3, -(2 * T + 1) * P, c * (T + 1) ** 3])
               for k, (P, c) in THIRD_ORDER_DATA.items()}

THIRD_ORDER_SEQ = {
    "alpha": _seq(lambda n: sum(comb(n, k) ** 2 * _cb(k) * _cb(n - k) for k in range(n + 1))),
    "beta": _seq(lambda n: sum(_cb(k) ** 2 * _cb(n - k) ** 2 for k in range(n + 1))),
    "gamma": _seq(lambda n: sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))),
    "delta": _seq(_delta),
    "epsilon": _seq(lambda n: sum(comb(n, k) ** 2 * comb(2 * k, n) ** 2 for k in range(n + 1))),
    "vartheta": _seq(lambda n: (-64) ** n * sum(rbinom(F(-1, 2), k) * rbinom(F(-1, 2), n - k) ** 3
                                                 for k in range(n + 1))),
    "iota": _seq(_sq(27, F(-1, 3), F(-2, 3))),
    "kappa": _seq(_sq(432, F(-1, 6), F(-5, 6))),
}

# second form of the vartheta sequence, used as a cross-check
VARTHETA_ALT = _seq(_sq(64, F(-1, 4), F(-3, 4)))

HADAMARD_TABLE_2x2 = {
    ("a", "A"): 45, ("a", "B"): 15, ("a", "C"): 68, ("a", "D"): 62,
    ("b", "A"): 25, ("b", "B"): 24, ("b", "C"): 51, ("b", "D"): 63,
    ("c", "A"): 58, ("c", "B"): 70, ("c", "C"): 69, ("c", "D"): 64,
    ("d", "A"): 36, ("d", "B"): 48, ("d", "C"): 38, ("d", "D"): 65,
    ("e", "A"): 111, ("e", "B"): 110, ("e", "C"): 30, ("e", "D"): 112,
    ("f", "A"): 133, ("f", "B"): 134, ("f", "C"): 135, ("f", "D"): 136,
    ("g", "A"): 137, ("g", "B"): 138, ("g", "C"): 139, ("g", "D"): 140,
    ("h", "A"): 141, ("h", "B"): 142, ("h", "C"): None, ("h", "D"): 143,
}

HADAMARD_TABLE_2x3 = {
    ("alpha", "A"): 39, ("alpha", "B"): 61, ("alpha", "C"): 37, ("alpha", "D"): 66,
    ("beta", "A"): 40, ("beta", "B"): 49, ("beta", "C"): 43, ("beta", "D"): 67,
    ("gamma", "A"): 44, ("gamma", "B"): 53, ("gamma", "C"): 52, ("gamma", "D"): 149,
    ("delta", "A"): 150, ("delta", "B"): 151, ("delta", "C"): 152, ("delta", "D"): 153,
}

LIFT_TABLE = {"alpha": 16, "beta": 35, "gamma": 29, "delta": 41, "epsilon": 42}

# the (k)*(m) product as printed, with 18 = 4.5 * 4
KM_PRODUCT = ThetaOperator([
    T**4,
    -4 * 18 * (2 * T + 1) ** 2,
    -2 * 18**3 * (27 * T**4 + 36 * T**3 + 74 * T**2 + 76 * T + 24),
    -32 * 18**5 * (2 * T + 1),
    2 * 18**7 * (27 * T**4 + 72 * T**3 + 128 * T**2 + 72 * T + 13),
    4 * 18**9 * (2 * T + 1) ** 2,
    -(18**12) * (T + 1) ** 4,
])

# fourth-order cases obtained from hypergeometric data with rational binomials
STAR_OPS = {
    "9*": ThetaOperator([T**4, -48 * (2 * T + 1) ** 2 * (72 * T**2 + 72 * T + 41),
                         2**14 * 3**4 * (2 * T + 1) * (2 * T + 3) * (3 * T + 2) * (3 * T + 4)]),
    "9**": ThetaOperator([T**4, -48 * (2 * T + 1) ** 2 * (72 * T**2 + 72 * T + 31),
                          2**12 * 3**6 * (2 * T + 1) ** 2 * (2 * T + 3) ** 2]),
    "14*": ThetaOperator([T**4, -(2**4) * 3**2 * (2 * T + 1) ** 2 * (2 * T**2 + 2 * T + 1),
                          2**10 * 3**2 * (2 * T + 1) * (2 * T + 3) * (3 * T + 2) * (3 * T + 4)]),
    "2*": ThetaOperator([T**4, -(2**4) * 5 * (2 * T + 1) ** 2 * (50 * T**2 + 50 * T + 33),
                         2**10 * 5**4 * (2 * T + 1) * (2 * T + 3) * (5 * T + 4) * (5 * T + 6)]),
}

STAR_SEQ = {
    "9*": _seq(_four(1728, F(-1, 12), F(-5, 12), F(-7, 12), F(-11, 12))),
    "9**": _seq(_four(1728, F(-1, 12), F(-7, 12), F(-5, 12), F(-11, 12))),
    "14*": _seq(_four(144, F(-1, 6), F(-1, 2), F(-5, 6), F(-1, 2))),
    "2*": _seq(_four(2000, F(-1, 10), F(-3, 10), F(-7, 10), F(-9, 10))),
}

NINE_STARSTAR_ALT = _seq(lambda n: 432**n * _cb(n) ** 2 * sum(
    (-1) ** k * rbinom(F(-5, 6), k) * rbinom(F(-1, 6), n - k) ** 2 for k in range(n + 1)))

# reflection at infinity
OP_124 = ThetaOperator([
    61**2 * T**4,
    -61 * (3029 * T**4 + 5572 * T**3 + 4677 * T**2 + 1891 * T + 305),
    1215215 * T**4 + 3428132 * T**3 + 4267228 * T**2 + 2572675 * T + 611586,
    -(3**4) * (39370 * T**4 + 140178 * T**3 + 206807 * T**2 + 142191 * T + 37332),
    3**8 * (566 * T**4 + 2230 * T**3 + 3356 * T**2 + 2241 * T + 558),
    -(3**13) * (T + 1) ** 4,
])

# dual of 124 exactly as printed; the z^4 factor reads "6135 theta^2 + 2863 theta^2"
OP_124_DUAL_PRINTED = ThetaOperator([
    T**4,
    -(566 * T**4 + 34 * T**3 + 62 * T**2 + 45 * T + 9),
    3 * (39370 * T**4 + 17302 * T**3 + 22493 * T**2 + 8369 * T + 1140),
    -(3**2) * (1215215 * T**4 + 1432728 * T**3 + 1274122 * T**2 + 538245 * T + 93222),
    3**7 * 61 * (3029 * T**4 + 6544 * T**3 + 6135 * T**2 + 2863 * T**2 + 548),
    -(3**12) * 61**2 * (T + 1) ** 4,
])

# case 55; the z^3 factor is printed as "144 theta^2 + 576 theta^3 + ...", read as 144 theta^4
OP_55 = ThetaOperator([
    9 * T**4,
    -12 * (208 * T**4 + 224 * T**3 + 163 * T**2 + 51 * T + 6),
    2**9 * (32 * T**4 - 928 * T**3 - 1606 * T**2 - 837 * T - 141),
    2**16 * (144 * T**4 + 576 * T**3 + 467 * T**2 + 144 * T + 15),
    -(2**24) * (2 * T + 1) ** 4,
])

OP_55_DUAL_PRINTED = ThetaOperator([
    T**4,
    -(2**4) * (576 * T**4 - 1152 * T**3 - 724 * T**2 - 148 * T - 13),
    -(2**17) * (32 * T**4 + 992 * T**3 - 166 * T**2 - 57 * T - 6),
    2**26 * 3 * (832 * T**4 + 768 * T**3 + 556 * T**2 + 192 * T + 25),
    -(2**40) * 3**2 * (2 * T + 1) ** 4,
])

# fifth-order operators and their fourth-order pullbacks
GUILLERA_1_D5 = ThetaOperator([
    T**5,
    -288 * (2 * T + 1) * (103680 * T**4 + 207360 * T**3 + 262944 * T**2 + 159264 * T + 41087),
    2**20 * 3**8 * (T + 1) * (207360 * T**4 + 829440 * T**3 + 1514592 * T**2 + 1370304 * T + 498143),
    -(2**38) * 3**17 * (T + 1) * (T + 2) * (2 * T + 3) * (240 * T**2 + 720 * T + 793),
    2**53 * 3**22 * (T + 1) * (T + 2) * (T + 3) * (360 * T**2 + 1440 * T + 1633),
    -(2**69) * 3**30 * (T + 1) * (T + 2) * (T + 3) * (T + 4) * (2 * T + 5),
])
GUILLERA_1_D4 = ThetaOperator([
    T**4,
    -(2**4) * 3**2 * (248832 * T**4 + 414720 * T**3 + 318528 * T**2 + 111168 * T + 14497),
    2**22 * 3**10 * (4 * T + 3) * (432 * T**3 + 1116 * T**2 + 886 * T + 165),
    -(2**34) * 3**18 * (4 * T + 1) * (4 * T + 3) * (4 * T + 7) * (4 * T + 9),
])
GUILLERA_1_SEQ = _seq(lambda n: 3456 ** (2 * n) * sum(
    (-1) ** k * comb(n, k)
    * _pochs((F(1, 2), F(1, 12), F(5, 12), F(7, 12), F(11, 12)), k) / factorial(k) ** 5
    for k in range(n + 1)))


GUILLERA_2_D5 = ThetaOperator([
    T**5,
    -4 * 12**6 * (T + F(1, 2)) * (T + F(1, 12)) * (T + F(5, 12)) * (T + F(7, 12)) * (T + F(11, 12)),
])
GUILLERA_2_D4 = ThetaOperator([
    T**4,
    -(2**4) * 3**2 * (331776 * T**4 + 82944 * T**3 + 13248 * T**2 - 28224 * T - 14497),
    2**19 * 3**8 * (248832 * T**4 + 124416 * T**3 + 25056 * T**2 - 4176 * T + 21143),
    -(2**32) * 3**14 * (331776 * T**4 + 248832 * T**3 + 60480 * T**2 + 21312 * T - 4453),
    2**51 * 3**22 * T * (2 * T + 1) * (12 * T + 1) * (12 * T + 5),
])
GUILLERA_2_SEQ = _seq(lambda n: F(factorial(12 * n), factorial(6 * n) * factorial(n) ** 6) / comb(4 * n, 2 * n))

# printed "(2+5)" and "(2+7)" read as (2 theta + 5), (2 theta + 7)
GUILLERA_3_D5 = ThetaOperator([
    T**5,
    2 * 12**2 * (2 * T + 1) * (124416 * T**4 + 248832 * T**3 + 234720 * T**2 + 110304 * T + 21121),
    112 * 12**10 * (T + 1) * (2 * T + 1) * (2 * T + 3) * (72 * T**2 + 144 * T + 101),
    16 * 12**16 * (2 * T + 1) * (2 * T + 3) * (2 * T + 5) * (1152 * T**2 + 3456 * T + 2831),
    12**26 * (T + 2) * (2 * T + 1) * (2 * T + 3) * (2 * T + 5) * (2 * T + 7),
    64 * 12**30 * (2 * T + 1) * (2 * T + 3) * (2 * T + 5) * (2 * T + 7) * (2 * T + 9),
])
GUILLERA_3_D4 = ThetaOperator([
    T**4,
    2**4 * 3**2 * (995328 * T**4 + 497664 * T**3 + 220608 * T**2 - 28224 * T - 35233),
    2**18 * 3**8 * (5142528 * T**4 + 5308416 * T**3 + 2946816 * T**2 + 9792 * T - 292949),
    2**35 * 3**14 * (1866240 * T**4 + 2985984 * T**3 + 2011320 * T**2 + 142920 * T - 208501),
    2**48 * 3**20 * (6656256 * T**4 + 14681088 * T**3 + 11732832 * T**2 + 1326960 * T - 1309273),
    2**64 * 3**28 * (4 * T - 1) * (51840 * T**3 + 160704 * T**2 + 177908 * T + 64537),
    2**79 * 3**34 * (4 * T - 1) * (4 * T + 3) * (4464 * T**2 + 13536 * T + 10985),
    2**97 * 3**43 * (T + 2) * (4 * T - 1) * (4 * T + 3) * (4 * T + 7),
    2**108 * 3**48 * (4 * T - 1) * (4 * T + 3) * (4 * T + 7) * (4 * T + 11),
])
GUILLERA_3_SEQ = _seq(lambda n: (4 * 12**6) ** n * rbinom(F(-1, 2), n) * sum(
    comb(n, k) * rbinom(F(-1, 12), k) * rbinom(F(-5, 12), k) * rbinom(F(-7, 12), k) * rbinom(F(-11, 12), k)
    for k in range(n + 1)))

HYPERGEOMETRIC_QUINTIC = ThetaOperator([T**4, -5 * (5 * T + 1) * (5 * T + 2) * (5 * T + 3) * (5 * T + 4)])
HYPERGEOMETRIC_QUINTIC_SEQ = _seq(lambda n: factorial(5 * n) // factorial(n) ** 5)
HYPERGEOMETRIC_SEXTIC_5 = ThetaOperator([T**5, -6 * (6 * T + 1) * (6 * T + 2) * (6 * T + 3) * (6 * T + 4) * (6 * T + 5)])


def zeta4_fifth_order() -> ThetaOperator:
    """Fifth-order operator for the zeta(4) sequence, from its d/dz form."""
    z = lambda *c: list(c)
    polys = [
        z(0, 12, 24),
        z(0, -1, 2130, 816),
        z(0, 0, -15, 11259, 2412),
        z(0, 0, 0, -25, 11502, 1752),
        z(0, 0, 0, 0, -10, 3375, 405),
        z(0, 0, 0, 0, 0, -1, 270, 27),
    ]
    return dz_to_theta(dz_from_polys(polys))


ZETA4_SEQ = _seq(_zeta4)


def zeta4_pullback_coeffs() -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
    """(a0, a1, a2, a3) of the fourth-order operator whose exterior square is the zeta(4) one."""
    zz = Poly((0, 1))
    P = Poly((-1, 270, 27))
    a3 = RatFunc(6 * Poly((-1, 315, 36)), zz * P)
    a2 = RatFunc(Poly((7, -4671, 759417, 180387, 10530)), zz**2 * P**2)
    a1 = RatFunc(Poly((-1, 1107, -450054, 49339854, 18416565, 2421009, 96228)), zz**3 * P**3)
    a0 = RatFunc(3 * Poly((11, 13224, 432135, 13643328, -37601010, 10875303, 253692, 8748)), zz**3 * P**4)
    return a0, a1, a2, a3


def zeta4_pullback() -> ThetaOperator:
    return dz_to_theta(DOp(list(zeta4_pullback_coeffs()) + [1]))


def sixth_order_example() -> ThetaOperator:
    """Sixth-order MUM operator, a factor of the order-9 operator for a 4-term recurrence."""
    zz = Poly((0, 1))
    L = Poly((-87, 196))
    p = lambda *c: Poly(tuple(reversed(c)))  # highest degree first, as printed
    # order-0 term fitted against the recurrence sequence; the other terms are as tabulated
    coeffs = [
        6 * p(15059072, -4148928, -9924264, 214891044, 106071966, 4609521),
        p(7138000128, 55844570880, -123313425872, 96429989856, -16021623504, 17983065996, 658503),
        zz * p(35509291776, 579712191744, -1530351585392, 1500993519824, -731658297456, 173252093886, 20413593),
        2 * zz**2 * p(20932110080, 508609400320, -1613572776144, 1739040695000, -824264516904, 148195933632,
                      29632635),
        zz**3 * L * p(85898176, 2768881024, -8828169756, 7144975624, -1768825884, -491985),
        3 * zz**4 * L**2 * p(21952, 873216, -2778608, 1235312, 435),
        zz**5 * L**3 * p(16, 752, -2368, -1),
    ]
    return dz_to_theta(DOp(coeffs))


def zeta4_recurrence_pair(N: int):
    """(A, B) from (n+1)^5 X_{n+1} - 3(2n+1)(3n^2+3n+1)(15n^2+15n+4) X_n - 3 n^3 (3n-1)(3n+1) X_{n-1} = 0."""
    from .diffop import Recurrence, unroll
    n = Poly.x()
    rec = Recurrence.from_shift_form([
        -3 * (n + 1) ** 3 * (3 * n + 2) * (3 * n + 4),
        -3 * (2 * n + 3) * (3 * (n + 1) ** 2 + 3 * (n + 1) + 1) * (15 * (n + 1) ** 2 + 15 * (n + 1) + 4),
        (n + 2) ** 5,
    ])
    return unroll(rec, [1, 12], N), unroll(rec, [0, 13], N), rec


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    operator: ThetaOperator
    sequence: Callable[[int], list[Fraction]] | None = None
    note: str = ""


def _entries() -> dict[str, CatalogEntry]:
    out = {}
    for k, op in SECOND_ORDER.items():
        out[k] = CatalogEntry(k, op, SECOND_ORDER_SEQ.get(k),
                              "" if k in SECOND_ORDER_SEQ else "no closed formula")
    for k, op in THIRD_ORDER.items():
        out[k] = CatalogEntry(k, op, THIRD_ORDER_SEQ.get(k),
                              "" if k in THIRD_ORDER_SEQ else "no closed formula")
    for k, op in STAR_OPS.items():
        out["#" + k] = CatalogEntry("#" + k, op, STAR_SEQ[k])
    return out


def catalog(key: str) -> CatalogEntry:
    e = _entries()
    if key not in e:
        raise UnknownCase(key)
    return e[key]


def catalog_sequence(key: str, N: int) -> list[Fraction]:
    e = catalog(key)
    if e.sequence is None:
        raise NoClosedFormSequence(key)
    return e.sequence(N)


def catalog_keys() -> list[str]:
    return list(_entries())
