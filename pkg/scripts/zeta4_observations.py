"""Integrality and congruence experiments around the zeta(4) operators.

Prints one block per experiment. Run from anywhere after installing:

    python3 scripts/zeta4_observations.py [--order 60]
"""
from __future__ import annotations

import argparse

import mpmath

from cyeq import catalog as cat
from cyeq.arithmetic import denominator_bound_check, prime_support, supercongruence, zeta_limit_check
from cyeq.diffop import frobenius_basis
from cyeq.mum import instanton_numbers, lambert_in_z, mirror_map, yukawa, yukawa_in_z
from cyeq.poly import Poly
from cyeq.series import largest_integral_root, ps_nth_root
from cyeq.wronskian import beukers_check, pseudo_coupling, w_basis


def head(xs, n=6):
    return ", ".join(str(x) for x in list(xs)[:n])


def main(order: int) -> None:
    op5 = cat.zeta4_fifth_order()
    b5 = frobenius_basis(op5, order + 1)
    y0 = b5[0].parts[0]
    m5 = mirror_map(b5)

    print("# order-5 operator")
    r = ps_nth_root(y0.truncate(40), 2)
    print(f"sqrt(y0): {head(r.c)}; integral to order 40: {r.is_integral()}")
    print(f"q/z largest integral root: {largest_integral_root(m5.q_over_z)}")
    print(f"(q/z)^(1/3): {head(ps_nth_root(m5.q_over_z, 3).c, 4)}")
    print(f"(z(q)/q)^(1/3): {head(ps_nth_root(m5.z_of_q().unshift(1), 3).c, 5)}")
    L = lambert_in_z(y0 * 2, 3)
    print(f"2 y0 as a weight-3 Lambert series in z: {head(L.coeffs)}; positive integers: "
          f"{all(x.denominator == 1 and x > 0 for x in L.coeffs)}")
    _, _, lam = pseudo_coupling(op5, 40, basis=frobenius_basis(op5, 41))
    print(f"weight-2 numbers: {head(lam.coeffs)}; positive integers up to l=15: "
          f"{all(x.denominator == 1 and x > 0 for x in lam.coeffs[:15])}")

    print("\n# supercongruences, A(m p^r) = A(m p^(r-1)) mod p^(kr)")
    A = list(y0.c)
    C = list(yukawa_in_z(b5, m5).c)
    for p in (2, 3, 5, 7):
        for r_ in (1, 2):
            if p**r_ >= len(C):
                continue
            a_ok = all(ok for _, ok in supercongruence(A, p, r_, 3)) if p**r_ < len(A) else None
            c_res = supercongruence(C, p, r_, 1)
            c_bad = [m for m, ok in c_res if not ok]
            print(f"p={p} r={r_}: A with k=3 {a_ok}; coupling-in-z with k=1 fails at m={c_bad or '-'}")

    print("\n# order-4 pullback")
    op4 = cat.zeta4_pullback()
    b4 = frobenius_basis(op4, 30)
    m4 = mirror_map(b4)
    K4 = yukawa(b4, m4)
    print(f"y0 prime support: {prime_support(b4[0].parts[0].c)}; z(q) integral: {m4.z_of_q().is_integral()}; "
          f"K integral: {K4.is_integral()}")
    print(f"N0 = 1 integral: {instanton_numbers(K4, 3).is_integral()}")
    lam = instanton_numbers(K4, 3, "auto")
    print(f"N0 = {lam.N0}: {head(lam.coeffs)}")

    print("\n# quadratic Wronskian relations")
    w = w_basis(frobenius_basis(op4, 51))
    for k in (0, 1, 2):
        rep = beukers_check(w, k, Poly((1, -270, -27)))
        extra = f"; c integral up to nu={rep.integral_upto}; closed form z^-{2 * k} P / disc^{rep.closed_form[0]}" \
            if k == 2 and rep.closed_form else ""
        print(f"k={k}: vanishes {rep.vanishes}{extra}")

    print("\n# rational approximations")
    A, B, _ = cat.zeta4_recurrence_pair(26)
    for power in (3, 4):
        bad = denominator_bound_check(B, power)
        print(f"D_n^{power} B_n integral for n <= 25: {not bad}" + (f" (first failure n={bad[0]})" if bad else ""))
    with mpmath.workdps(140):
        target = mpmath.nstr(mpmath.zeta(4), 135)
    for n in (2, 5, 10, 15, 20, 25):
        gap, _ = zeta_limit_check(A[:n + 1], B[:n + 1], target, 120)
        print(f"n={n:2d}: |B_n/A_n - zeta(4)| = {mpmath.nstr(gap, 3)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=60)
    main(ap.parse_args().order)
