"""Hadamard products, reflections at infinity and the fourth-order case data.

    python3 scripts/hadamard_and_duals.py
"""
from __future__ import annotations

from fractions import Fraction as F

from cyeq import catalog as cat
from cyeq.diffop import apply, find_operator, frobenius_basis, operator_from_recurrence, unroll
from cyeq.hadamard import (had_closed_2x2, had_closed_2x3, had_square_closed, hadamard_seq, meurman_product,
                           normal_form, second_order_shape)
from cyeq.mum import instanton_numbers, mirror_map, rescale_coupling, yukawa
from cyeq.series import PowerSeries, largest_integral_root, ps_nth_root
from cyeq.transforms import coefficient_diff, dualize


def coupling(op, N):
    b = frobenius_basis(op, N)
    return yukawa(b, mirror_map(b))


def head(xs, n=6):
    return ", ".join(str(x) for x in list(xs)[:n])


def seq(key, n):
    try:
        return cat.catalog_sequence(key, n)
    except cat.NoClosedFormSequence:
        from cyeq.diffop import sequence_from_operator
        return sequence_from_operator(cat.SECOND_ORDER[key], n)


def tables() -> None:
    print("# closed-formula products, 40-term annihilation")
    for (a, b), num in cat.HADAMARD_TABLE_2x2.items():
        P, c = second_order_shape(cat.SECOND_ORDER[a])
        Q, _ = second_order_shape(cat.SECOND_ORDER[b])
        op = had_closed_2x2(P, c, Q)
        ok = apply(op, PowerSeries(hadamard_seq(seq(a, 40), seq(b, 40)))).is_zero()
        print(f"({a})*({b}) case {num or '-'}: {ok}")
    for (a, b), num in cat.HADAMARD_TABLE_2x3.items():
        P, c = cat.THIRD_ORDER_DATA[a]
        Q, _ = second_order_shape(cat.SECOND_ORDER[b])
        op = had_closed_2x3(P, -c, Q)
        ok = apply(op, PowerSeries(hadamard_seq(seq(a, 40), seq(b, 40)))).is_zero()
        print(f"({a})*({b}) case {num}: {ok}")
    P, c = second_order_shape(cat.SECOND_ORDER["h"])
    Q, _ = second_order_shape(cat.SECOND_ORDER["C"])
    K = coupling(had_closed_2x2(P, c, Q), 22)
    print(f"(h)*(C) coupling constant to order {K.order}: {all(x == 0 for x in K.c[1:])}")


def squares() -> None:
    print("\n# squares")
    for key, (A, B) in dict(k=(3, 81), l=(4, 64), m=(24, 1296)).items():
        op = had_square_closed(A, B)
        s = PowerSeries([x * x for x in cat.catalog_sequence(key, 40)])
        ok = apply(op, s).is_zero()
        b = frobenius_basis(op, 16)
        m = mirror_map(b)
        root = largest_integral_root(m.q_over_z)
        print(f"({key})^2 annihilated: {ok}; q/z largest integral root {root}: "
              f"{head(ps_nth_root(m.q_over_z, root).c, 5)}")


def km_product() -> None:
    print("\n# (k)*(m) through the product recurrence")
    Pa, Qa = normal_form(cat.SECOND_ORDER["k"])
    Pb, Qb = normal_form(cat.SECOND_ORDER["m"])
    rec = meurman_product(Pa, Qa, Pb, Qb)
    prod = hadamard_seq(cat.catalog_sequence("k", 80), cat.catalog_sequence("m", 80))
    vals = unroll(rec, prod[:rec.start], 80)
    print(f"recurrence depth {rec.depth}, operator order {operator_from_recurrence(rec).order}; "
          f"reproduces the product: {vals == prod}")
    op = find_operator(vals, 4, 8)
    print(f"fitted order-4 operator equals the tabulated one: {op == cat.KM_PRODUCT.canonical()}")
    K = rescale_coupling(coupling(op, 8), F(1, 3), 1)
    print(f"numbers after q -> q/3: {head(instanton_numbers(K, 3).coeffs, 5)}")


def duals() -> None:
    print("\n# reflection z -> c/z")
    for op, c, printed, name in ((cat.OP_124, F(1, 3**5), cat.OP_124_DUAL_PRINTED, "#124"),
                                 (cat.OP_55, F(1, 2**18), cat.OP_55_DUAL_PRINTED, "#55")):
        d = dualize(op, c)
        diff = coefficient_diff(d, printed)
        print(f"{name}: involution {dualize(d, c) == op.canonical()}; differences from the tabulated dual: "
              + ("; ".join(f"z^{i} theta^{j} computed {x} tabulated {y}" for i, j, x, y in diff) or "none"))


def star_cases() -> None:
    print("\n# fourth-order cases with rational binomial data")
    K1 = coupling(cat.STAR_OPS["9*"], 8)
    K2 = coupling(cat.STAR_OPS["9**"], 8)
    print(f"#9* numbers: {head(instanton_numbers(K1).coeffs, 4)}")
    flip = PowerSeries([a * (-1) ** n for n, a in enumerate(K1.c)])
    print(f"#9** coupling equals #9* at -q: {K2 == flip}; identical: {K1 == K2}")
    K = rescale_coupling(coupling(cat.STAR_OPS["14*"], 8), F(1, 3), 2)
    print(f"#14* after q -> (q/3)^(1/2): {head(instanton_numbers(K).coeffs, 3)}")
    for k in ("1", "2", "3"):
        K = coupling(getattr(cat, f"GUILLERA_{k}_D4"), 6)
        print(f"pullback variant {k}: {head(instanton_numbers(K).coeffs, 3)}")


if __name__ == "__main__":
    tables()
    squares()
    km_product()
    duals()
    star_cases()
