from fractions import Fraction as F
from math import comb

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyeq import catalog as cat
from cyeq.arithmetic import (InsufficientLength, count_fixed_points, denominator_bound_check, divisors,
                             factorize, fixed_points_from_orbits, lcm_upto, mobius, orbit_permutation,
                             padic_valuation, polylog_identity_check, prime_support, primes_upto, realizability,
                             supercongruence, zeta_limit_check)


def test_number_theory_basics():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert lcm_upto(10) == 2520
    assert padic_valuation(F(12, 5), 2) == 2 and padic_valuation(F(12, 5), 5) == -1
    assert padic_valuation(0, 3) is None
    assert prime_support([F(1, 6), F(5, 4), 3]) == [2, 3]


def test_realizability_example():
    rep = realizability([1, 5, 7, 17, 31, 65], 1)
    assert list(rep.B) == [1, 2, 2, 3, 6, 9] and rep.realizable
    assert not realizability([1, 2], 1).realizable


def test_apery_supercongruence():
    A = [sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1)) for n in range(41)]
    for p in (5, 7):
        assert all(ok for _, ok in supercongruence(A, p, 1, 3))
    with pytest.raises(InsufficientLength):
        supercongruence(A[:4], 5, 1, 3)


def test_polylog_identity():
    A = [sum(comb(n, k) ** 2 for k in range(n + 1)) for n in range(1, 21)]
    assert polylog_identity_check(A, 1, 20).is_zero()


def test_denominator_bound():
    _, B, _ = cat.zeta4_recurrence_pair(26)
    assert denominator_bound_check(B, 4) == []
    assert denominator_bound_check(B, 3) != []


def test_zeta_limit_gap():
    A, B, _ = cat.zeta4_recurrence_pair(11)
    with mpmath.workdps(140):
        target = mpmath.nstr(mpmath.pi**4 / 90, 130)
    gap, approx = zeta_limit_check(A, B, target, 120)
    assert gap < mpmath.mpf("1e-30")


@given(st.integers(1, 3000))
def test_mobius_inversion(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@settings(max_examples=40)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=8))
def test_orbit_counting_round_trip(B):
    # a map with B_d orbits of length d has sum_{d|n} d B_d fixed points of T^n
    A = fixed_points_from_orbits(B)
    perm = orbit_permutation(B)
    assert sorted(perm) == list(range(len(perm)))
    for n in range(1, len(B) + 1):
        assert count_fixed_points(perm, n) == A[n - 1]
    assert list(realizability(A, 1).B) == B


@settings(max_examples=40)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12), st.integers(0, 2))
def test_realizability_inverts(B, k):
    # n^k B_n = sum_{d|n} mu(n/d) A_d inverts A_n = sum_{d|n} d^k B_d
    A = [sum(d**k * B[d - 1] for d in divisors(n)) for n in range(1, len(B) + 1)]
    assert list(realizability(A, k).B) == B
    assert polylog_identity_check(A, k, len(A)).is_zero()
