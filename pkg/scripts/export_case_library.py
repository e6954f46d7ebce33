"""Regenerate src/cyeq/data/*.json from the in-code catalog.

Expected heads in the metadata come from two places: closed-form binomial
sums evaluated here (independent of the operators), and published values
typed in below. Run from the repository root:

    python3 scripts/export_case_library.py
"""
from __future__ import annotations

import argparse
from math import comb
from pathlib import Path

from cyeq import catalog as cat
from cyeq.files import operator_doc, recurrence_doc, save
from cyeq.poly import Poly

HEAD = 8


def seq_head(gen, n=HEAD):
    return [int(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}" for a in gen(n)]


def n(*cs):
    return Poly(cs)


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    docs = []

    # the zeta(4) pair and the hypergeometric root operators
    docs.append(operator_doc("zeta4_order5", cat.zeta4_fifth_order(), {
        "source": "fifth-order operator of the zeta(4) Apery-like sequence",
        "y0_head": seq_head(cat.ZETA4_SEQ),
        "lambert": {"weight": 2, "head": [33, 1542, 123501, 12815001, 1546290516]},
    }))
    docs.append(operator_doc("zeta4_pullback", cat.zeta4_pullback(), {
        "source": "fourth-order operator whose exterior square is zeta4_order5",
        "exterior_square": "zeta4_order5",
        "lambert": {"weight": 3, "n0": "auto", "head": [-132, -1995, -52204, -1743900]},
    }))
    docs.append(operator_doc("quintic", cat.HYPERGEOMETRIC_QUINTIC, {
        "source": "hypergeometric quintic",
        "y0_head": seq_head(cat.HYPERGEOMETRIC_QUINTIC_SEQ),
        "lambert": {"weight": 3, "n0": 5, "head": [2875, 609250, 317206375]},
    }))
    docs.append(operator_doc("sextic5", cat.HYPERGEOMETRIC_SEXTIC_5, {
        "source": "fifth-order hypergeometric operator with parameters k/6",
    }))

    for key, op in cat.STAR_OPS.items():
        name = "case" + key.replace("*", "s")
        meta = {"source": f"fourth-order case #{key}", "y0_head": seq_head(cat.STAR_SEQ[key])}
        if key == "9*":
            meta["lambert"] = {"weight": 3, "head": [-480, -226848, 16034720]}
        if key == "14*":
            meta["lambert"] = {"weight": 3, "rescale": ["1/3", 2], "head": [-2592, -307800, 81451104]}
        if key == "2*":
            meta["status"] = "unsupported-arithmetic"
            meta["note"] = "instanton numbers live in Z[sqrt5]; only rational data is checked"
        docs.append(operator_doc(name, op, meta))

    docs.append(operator_doc("case124", cat.OP_124, {
        "source": "case #124",
        "dual": {"c": "3^-5", "printed": "case124_dual_printed", "known_mismatch": [[4, 1], [4, 2]]},
    }))
    docs.append(operator_doc("case124_dual_printed", cat.OP_124_DUAL_PRINTED, {
        "source": "published dual of case #124, transcribed literally",
        "note": "the z^4 term reads 6135 theta^2 + 2863 theta^2; reflection gives 2863 theta",
    }))
    docs.append(operator_doc("case55", cat.OP_55, {
        "source": "case #55",
        "dual": {"c": "2^-18", "printed": "case55_dual_printed"},
    }))
    docs.append(operator_doc("case55_dual_printed", cat.OP_55_DUAL_PRINTED, {
        "source": "published dual of case #55",
    }))

    for key, op in cat.SECOND_ORDER.items():
        prefix = "ord2_" if key.islower() else "hyp2_"
        meta = {"source": f"second-order case ({key})"}
        if key in cat.SECOND_ORDER_SEQ:
            meta["y0_head"] = seq_head(cat.SECOND_ORDER_SEQ[key])
        docs.append(operator_doc(prefix + key, op, meta))
    for key, op in cat.THIRD_ORDER.items():
        meta = {"source": f"third-order case ({key})"}
        if key in cat.THIRD_ORDER_SEQ:
            meta["y0_head"] = seq_head(cat.THIRD_ORDER_SEQ[key])
        docs.append(operator_doc("ord3_" + key, op, meta))

    docs.append(operator_doc("km_product", cat.KM_PRODUCT, {
        "source": "Hadamard product (k)*(m)",
        "y0_head": [int(a * b) for a, b in zip(cat.catalog_sequence("k", HEAD),
                                               cat.catalog_sequence("m", HEAD))],
        "lambert": {"weight": 3, "rescale": ["1/3", 1], "head": [-48, -426, -2864, 77958, 4942032]},
    }))

    gl = [("1", [2710944, -717640978896, 302270555492914464]),
          ("2", [-2710944, -717640301160]),
          ("3", [2710944, -717640978896, 302270555492914464])]
    for k, nums in gl:
        d5 = getattr(cat, f"GUILLERA_{k}_D5")
        d4 = getattr(cat, f"GUILLERA_{k}_D4")
        seqf = getattr(cat, f"GUILLERA_{k}_SEQ")
        docs.append(operator_doc(f"guillera{k}_order5", d5, {
            "source": f"fifth-order operator, variant {k}", "y0_head": seq_head(seqf, 5)}))
        docs.append(operator_doc(f"guillera{k}_order4", d4, {
            "source": f"fourth-order pullback, variant {k}",
            "exterior_square": f"guillera{k}_order5",
            "lambert": {"weight": 3, "head": nums}}))

    docs.append(operator_doc("sixth_order", cat.sixth_order_example(), {
        "source": "order-6 factor attached to the zeta(3), zeta(5) recurrence",
        "note": "order-0 coefficient refitted against the recurrence; see zeta35_recurrence",
        "z_of_q_head": [0, 1, 230, -26827, 24147708, -23334210874],
        "lambert": {"weight": 2, "head": [-320, 118264, -84117876, 80349364184, -90632838175404]},
    }))

    # recurrences, shift form in m with A_{m+3}, A_{m+2}, A_{m+1}, A_m
    m2 = n(2, 1)  # the index n of the printed form is m + 2
    p = lambda cs, x: sum((c * x**i for i, c in enumerate(reversed(cs))), Poly())
    c3 = (m2 + 1) ** 6 * p([41218, -48459, 20010, -2871], m2)
    c2 = 2 * p([48802112, 89030880, 36002654, -24317344, -19538418, 1311365, 3790503, 460056,
                -271701, -60291], m2)
    c1 = -4 * (2 * m2 - 1) * p([3874492, -2617900, -3144314, 2947148, 647130, -1182926, 115771,
                                170716, -44541], m2)
    c0 = -4 * (m2 - 1) ** 4 * (2 * m2 - 1) * (2 * m2 - 3) * p([41218, 75195, 46746, 9898], m2)
    docs.append(recurrence_doc("zeta35_recurrence", [c0, c1, c2, c3], start=-2, initial={"A": [1]},
                               metadata={"source": "four-term recurrence for simultaneous zeta(3), zeta(5) approximations",
                                         "note": "seeded with A_0 = 1; A_n z^n solves sixth_order",
                                         "heads": {"A": [1, -42, 17934, -14290980]}}))
    c3 = m2 * (m2 + 1) ** 5 * p([91, -182, 126, -30], m2)
    c2 = -m2 * p([3458, 1729, -2947, -2295, 901, 1190, 52, -228, -60], m2)
    c1 = -p([153881, -307762, 185311, 2960, -31631, -88, 5239, -610, -440, 100], m2)
    c0 = 24 * (m2 - 1) ** 3 * (2 * m2 - 1) * (6 * m2 - 5) * (6 * m2 - 7) * p([91, 91, 35, 5], m2)
    binom6 = [sum(comb(k, j) ** 6 for j in range(k + 1)) for k in range(HEAD)]
    docs.append(recurrence_doc("binom6_recurrence", [c0, c1, c2, c3], start=-1, initial={"A": binom6[:2]},
                               metadata={"source": "four-term recurrence for sum_k binom(n,k)^6",
                                         "heads": {"A": binom6}}))
    _, _, rec = cat.zeta4_recurrence_pair(2)
    docs.append(recurrence_doc("zeta4_recurrence", rec.shift_form(), start=rec.start - rec.depth,
                               initial={"A": [1, 12], "B": [0, 13]},
                               metadata={"source": "three-term recurrence with limit B_n/A_n = zeta(4)",
                                         "limit": "zeta(4)",
                                         "heads": {"A": seq_head(cat.ZETA4_SEQ, 5),
                                                   "B": [0, 13, "13923/16"]}}))

    for d in docs:
        save(out / f"{d['name']}.json", d)
    print(f"wrote {len(docs)} files to {out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src" / "cyeq" / "data")
    main(ap.parse_args().out)
