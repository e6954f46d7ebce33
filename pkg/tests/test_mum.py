from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyeq import catalog as cat
from cyeq.diffop import frobenius_basis
from cyeq.mum import (FractionalPowersPresent, auto_n0, condition22, instanton_numbers, lambert_decompose,
                      mirror_map, prop2_check, rescale_coupling, yukawa, yukawa_in_z, yukawa_via_a3)
from cyeq.series import PowerSeries

# published quintic data: q/z head, instanton numbers with N0 = 5
QUINTIC_QZ = [1, 770, 1014275, 1703916750]
QUINTIC_N = [2875, 609250, 317206375, 242467530000]


@pytest.fixture(scope="module")
def quintic():
    op = cat.HYPERGEOMETRIC_QUINTIC
    b = frobenius_basis(op, 8)
    return op, b, mirror_map(b)


def test_mirror_map_quintic(quintic):
    _, b, m = quintic
    assert list(m.q_over_z.c[:4]) == QUINTIC_QZ
    # z(q) inverts q(z)
    zq = m.z_of_q()
    assert zq[0] == 0 and zq[1] == 1
    assert (m.q_over_z.shift(1))(zq) == PowerSeries.z(zq.order)


def test_instanton_numbers_quintic(quintic):
    _, b, m = quintic
    lam = instanton_numbers(yukawa(b, m), 3, 5)
    assert lam.N0 == 5
    assert list(lam.coeffs[:4]) == QUINTIC_N
    assert lam.is_integral() and lam.first_nonintegral() is None


def test_yukawa_two_routes_agree(quintic):
    op, b, m = quintic
    assert yukawa_via_a3(op, 8) == yukawa_in_z(b, m)


def test_condition22_and_wronskian_relation(quintic):
    op, b, _ = quintic
    assert condition22(op)[0]
    assert prop2_check(b).is_zero()
    assert condition22(cat.zeta4_pullback())[0]


def test_auto_n0_on_pullback():
    b = frobenius_basis(cat.zeta4_pullback(), 14)
    K = yukawa(b, mirror_map(b))
    assert auto_n0(K) == 4
    lam = instanton_numbers(K, 3, "auto")
    assert list(lam.coeffs[:4]) == [-132, -1995, -52204, -1743900]
    assert not instanton_numbers(K, 3, 1).is_integral()


def test_rescale_coupling():
    K = PowerSeries([1, 0, 6, 0, 10])
    assert rescale_coupling(K, 3, 2) == PowerSeries([1, 18, 90])
    with pytest.raises(FractionalPowersPresent):
        rescale_coupling(PowerSeries([1, 2, 3]), 1, 2)


@given(st.integers(0, 9), st.lists(st.integers(-40, 40), min_size=8, max_size=8), st.sampled_from([2, 3]))
def test_lambert_round_trip(n0, nums, w):
    # build K = N0 + sum N_l l^w q^l / (1 - q^l) and decompose it again
    N = len(nums)
    c = [F(n0)] + [F(0)] * N
    for l, a in enumerate(nums, start=1):
        for k in range(l, N + 1, l):
            c[k] += a * l**w
    lam = lambert_decompose(PowerSeries(c), w)
    assert list(lam.coeffs) == nums and lam.N0 == n0
