"""Integrality, realizability and congruence checks on sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import sympy

from .series import PowerSeries


class InsufficientLength(ValueError):
    pass


def divisors(n: int) -> list[int]:
    return [int(d) for d in sympy.divisors(n)]


def factorize(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in sympy.factorint(abs(n)).items() if p > 1}


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def primes_upto(n: int) -> list[int]:
    return [int(p) for p in sympy.primerange(2, n + 1)]


def padic_valuation(x, p: int) -> int | None:
    """v_p of a rational; None for zero."""
    x = Fraction(x)
    if x == 0:
        return None
    v = 0
    a, b = x.numerator, x.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v


def prime_support(values) -> list[int]:
    """Primes dividing some denominator."""
    ps: set[int] = set()
    for v in values:
        ps.update(factorize(Fraction(v).denominator))
    return sorted(ps)


@dataclass(frozen=True)
class RealizabilityReport:
    k: int
    B: tuple[Fraction, ...]
    first_noninteger_index: int | None
    prime_support: tuple[int, ...]

    @property
    def realizable(self) -> bool:
        return self.first_noninteger_index is None


def realizability(A, k: int = 1) -> RealizabilityReport:
    """B_n = n^{-k} sum_{d|n} mu(n/d) A_d for A given as A_1, A_2, ..."""
    A = [Fraction(a) for a in A]
    B = []
    for n in range(1, len(A) + 1):
        s = sum(mobius(n // d) * A[d - 1] for d in divisors(n))
        B.append(Fraction(s, n**k))
    bad = next((i + 1 for i, b in enumerate(B) if b.denominator != 1), None)
    return RealizabilityReport(k, tuple(B), bad, tuple(prime_support(B)))


def fixed_points_from_orbits(B) -> list[int]:
    """Fixed points of T^n for a map with B_d orbits of length d: sum_{d|n} d B_d."""
    return [sum(d * int(B[d - 1]) for d in divisors(n)) for n in range(1, len(B) + 1)]


def orbit_permutation(B) -> list[int]:
    """Explicit permutation of {0..M-1} with B_d cycles of each length d (requires B_d >= 0)."""
    perm: list[int] = []
    for d, b in enumerate(B, start=1):
        b = int(b)
        if b < 0:
            raise ValueError("negative orbit count")
        for _ in range(b):
            base = len(perm)
            perm.extend(base + (i + 1) % d for i in range(d))
    return perm


def count_fixed_points(perm: list[int], n: int) -> int:
    cnt = 0
    for x in range(len(perm)):
        y = x
        for _ in range(n):
            y = perm[y]
        cnt += y == x
    return cnt


def supercongruence(A, p: int, r: int, k: int, n: int | None = None) -> list[tuple[int, bool]]:
    """A(m p^r) == A(m p^{r-1}) mod p^{kr} for m >= 1 (or just m = n).

    A is indexed from 0. Returns (m, holds) pairs; raises if A is too short.
    """
    ms = [n] if n is not None else list(range(1, (len(A) - 1) // p**r + 1))
    if not ms or ms[-1] * p**r >= len(A):
        raise InsufficientLength(f"sequence too short for p={p}, r={r}")
    out = []
    for m in ms:
        diff = Fraction(A[m * p**r]) - Fraction(A[m * p ** (r - 1)])
        v = padic_valuation(diff, p)
        out.append((m, v is None or v >= k * r))
    return out


def polylog_identity_check(A, k: int, N: int) -> PowerSeries:
    """sum A_n z^n / n^k - sum_n B_n Li_k(z^n), A indexed from 1; zero iff consistent."""
    rep = realizability(A[:N], k)
    lhs = [Fraction(0)] + [Fraction(A[n - 1]) / n**k for n in range(1, N + 1)]
    rhs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        for m in range(1, N // n + 1):
            rhs[n * m] += rep.B[n - 1] / Fraction(m) ** k
    return PowerSeries([a - b for a, b in zip(lhs, rhs)])


def lcm_upto(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out = lcm(out, i)
    return out


def denominator_bound_check(B, power: int = 4) -> list[int]:
    """Indices n where D_n^power * B_n is not an integer."""
    return [n for n, b in enumerate(B) if (Fraction(b) * lcm_upto(n) ** power).denominator != 1]


def zeta_limit_check(A, B, target: str, digits: int = 120):
    """|B_n/A_n - target| at n = len-1, with decimal arithmetic at the given precision.

    Returns (gap, approx) as mpmath numbers. This is the only inexact step here.
    """
    import mpmath

    with mpmath.workdps(digits):
        n = len(A) - 1
        approx = mpmath.mpf(Fraction(B[n]).numerator) / mpmath.mpf(Fraction(B[n]).denominator)
        approx /= mpmath.mpf(Fraction(A[n]).numerator) / mpmath.mpf(Fraction(A[n]).denominator)
        gap = abs(approx - mpmath.mpf(target))
        return gap, approx
