from fractions import Fraction as F

from cyeq import catalog as cat
from cyeq.diffop import THETA, ThetaOperator, apply, frobenius_basis, theta_to_dz
from cyeq.mum import condition22
from cyeq.poly import Poly
from cyeq.wronskian import (beukers_check, exterior_square, exterior_square_dz, pseudo_coupling, verify_prop5,
                            w_basis, zwronskian)

T = THETA


def test_exterior_square_order_drops_under_condition():
    op = cat.HYPERGEOMETRIC_QUINTIC
    assert condition22(op)[0]
    ext = exterior_square(op)
    assert ext.order == 5
    b = frobenius_basis(op, 20)
    for w in w_basis(b):
        assert apply(ext, w).is_zero()


def test_exterior_square_order_six_without_condition():
    op = ThetaOperator([T**4, -Poly([0, 1])])  # theta^4 - z theta
    assert not condition22(op)[0]
    ext = exterior_square(op)
    assert ext.order == 6
    b = frobenius_basis(op, 26)
    pairs = [zwronskian(b[i], b[j]) for i in range(4) for j in range(i + 1, 4)]
    for w in pairs:
        assert apply(ext, w).truncate(25).is_zero()


def test_exterior_square_of_dz_form_matches():
    d = theta_to_dz(cat.zeta4_pullback())
    assert exterior_square(d) == exterior_square(cat.zeta4_pullback())
    assert exterior_square_dz(*d.a).order == 5


def test_prop5_and_its_corruption():
    target = cat.zeta4_fifth_order()
    assert verify_prop5(cat.zeta4_pullback_coeffs(), target)
    assert not verify_prop5(cat.zeta4_pullback_coeffs(), target, corrupt=True)


def test_beukers_relations_quintic():
    w = w_basis(frobenius_basis(cat.HYPERGEOMETRIC_QUINTIC, 20))
    assert beukers_check(w, 0).vanishes
    assert beukers_check(w, 1).vanishes
    assert not beukers_check(w, 2).vanishes


def test_beukers_k2_closed_form():
    w = w_basis(frobenius_basis(cat.zeta4_pullback(), 30))
    rep = beukers_check(w, 2, Poly((1, -270, -27)))
    assert rep.log_free and rep.closed_form is not None
    m, num = rep.closed_form
    # z^-4 / (1 - 270 z - 27 z^2)
    assert m == 1 and num == (1,)


def test_pseudo_coupling_sixth_order():
    m, K, lam = pseudo_coupling(cat.sixth_order_example(), 6)
    assert list(m.z_of_q().c[:4]) == [0, 1, 230, -26827]
    assert lam.weight == 2 and lam.coeffs[0] == -320
