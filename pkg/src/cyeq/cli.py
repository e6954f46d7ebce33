"""Command-line entry point: analyze | hadamard | transform | check | catalog-list.

Exit codes: 0 pass, 1 a check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import analyze_operator, format_report
from .arithmetic import (InsufficientLength, denominator_bound_check, polylog_identity_check,
                         realizability, supercongruence, zeta_limit_check)
from .config import AnalysisConfig, CheckConfig, FitConfig
from .diffop import (THETA, NotMUM, SingularStep, ThetaOperator, apply, find_operator,
                     operator_from_recurrence, sequence_from_operator, unroll)
from .files import (CaseFile, ParseError, dumps, format_rational, load, operator_doc, parse_rational,
                    sequence_doc)
from .hadamard import (DegenerateLeading, had_closed_2x2, had_closed_2x3, had_square_closed,
                       hadamard_seq, meurman_product, meurman_square, normal_form, second_order_shape)
from .library import case_names, check_case, load_case
from .series import PowerSeries
from .transforms import (NotASymmetricSquare, ShapeMismatch, coefficient_diff, dualize, lift_operator,
                         prop7_transform_op, prop8_transform, symmetric_square_root, third_order_shape)
from .wronskian import exterior_square


class CheckFailed(Exception):
    pass


def resolve(ref: str) -> CaseFile:
    """A path to a case file, or the name of a shipped case."""
    p = Path(ref)
    if p.exists():
        return load(p)
    if p.suffix == ".json" or "/" in ref:
        raise ParseError(f"no such file: {ref}")
    return load_case(ref)


def need_operator(cf: CaseFile) -> ThetaOperator:
    if cf.operator is None:
        raise ParseError(f"{cf.name}: expected an operator file, got {cf.kind}")
    return cf.operator


def emit(args, name: str, report: dict, text: str | None = None) -> None:
    doc = {"tool": f"cyeq {__version__}", "name": name, "report": report}
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=1) + "\n")
    else:
        sys.stdout.write((text if text is not None else format_report(name, report)) + "\n")
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=1) + "\n")


def write_operator(args, name: str, op: ThetaOperator, meta: dict | None = None) -> None:
    if args.out:
        Path(args.out).write_text(dumps(operator_doc(name, op, meta)))


def _n0(value: str):
    if value in ("one", "auto"):
        return value
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("--n0 takes an integer, 'one' or 'auto'")


def _rat(value: str) -> Fraction:
    try:
        return parse_rational(value)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e))


# analyze

def cmd_analyze(args) -> int:
    cf = resolve(args.file)
    op = need_operator(cf)
    if not 2 <= op.order <= 6:
        raise ParseError(f"operator order {op.order} outside 2..6")
    rescale = (args.rescale[0], int(args.rescale[1])) if args.rescale else None
    cfg = AnalysisConfig(order=args.order, n0=args.n0, weight=args.weight, rescale=rescale,
                         head=args.head)
    rep = analyze_operator(op, cfg)
    emit(args, cf.name, rep)
    return 0


# hadamard

def _factor_values(op: ThetaOperator, N: int) -> list[Fraction]:
    return sequence_from_operator(op, N)


def _annihilation(op: ThetaOperator, values) -> list[int]:
    r = apply(op, PowerSeries(values))
    return [k for k, a in enumerate(r.c) if a != 0]


def _unroll_seeded(rec, seeds, N: int) -> list[Fraction]:
    """Unroll, re-seeding from the termwise product whenever the leading term vanishes."""
    k = max(rec.start, 1)
    while True:
        try:
            return unroll(rec, seeds(k), N)
        except SingularStep as e:
            if e.n + 1 > N:
                return seeds(N)
            k = e.n + 1


def cmd_hadamard(args) -> int:
    chk = CheckConfig(terms=args.terms)
    a = need_operator(resolve(args.a))
    b = a if args.square else need_operator(resolve(args.b))
    name = f"{resolve(args.a).name}*{'2' if args.square else resolve(args.b).name}"
    N = chk.terms
    vals = hadamard_seq(_factor_values(a, N), _factor_values(b, N))
    report: dict = {"mode": args.mode}
    if args.mode == "closed":
        if args.square:
            P, c = second_order_shape(a)
            A, rem = P.divmod(2 * THETA + 1)
            if not rem.is_zero() or A.degree() > 0:
                raise ShapeMismatch("square formula needs theta^2 - A z (2theta+1) - B z^2 (theta+1)^2")
            op = had_square_closed(A[0] if not A.is_zero() else 0, c)
        else:
            Q, cq = second_order_shape(b)
            if cq != 0:
                raise ShapeMismatch("right factor must be theta^2 - z Q(theta)")
            if a.order == 2:
                P, c = second_order_shape(a)
                op = had_closed_2x2(P, c, Q)
            else:
                P3, c3 = third_order_shape(a)
                op = had_closed_2x3(P3, -c3, Q)
        report["operator"] = op.pretty()
    else:
        Pa, Qa = normal_form(a)
        if args.square:
            rec = meurman_square(Pa, Qa)
        else:
            Pb, Qb = normal_form(b)
            rec = meurman_product(Pa, Qa, Pb, Qb)
        report["recurrence_depth"] = rec.depth
        report["recurrence_operator"] = operator_from_recurrence(rec).canonical().pretty()
        fit = FitConfig(order=args.fit_order, max_zdeg=args.fit_zdeg)
        need = (fit.order + 1) * (fit.max_zdeg + 1) + fit.extra
        ya, yb = _factor_values(a, need), _factor_values(b, need)
        seeds = lambda k: hadamard_seq(ya[:k], yb[:k])
        long_vals = _unroll_seeded(rec, seeds, need)
        report["recurrence_reproduces_product"] = long_vals[:N] == vals
        op = find_operator(long_vals, fit.order, fit.max_zdeg, fit.extra)
        if op is None:
            report["operator"] = None
            emit(args, name, report)
            return 1
        report["operator"] = op.pretty()
    bad = _annihilation(op, vals)
    report["annihilation_terms"] = N
    report["annihilation_failures"] = bad
    ok = not bad and report.get("recurrence_reproduces_product", True)
    report["pass"] = ok
    write_operator(args, name, op, {"source": f"Hadamard product {name}"})
    emit(args, name, report)
    return 0 if ok else 1


# transform

def cmd_transform(args) -> int:
    cf = resolve(args.file)
    op = need_operator(cf)
    report: dict = {"kind": args.kind}
    ok = True
    if args.kind == "exterior-square":
        out = exterior_square(op)
    elif args.kind == "dualize":
        if args.c is None:
            raise ParseError("dualize needs --c")
        out = dualize(op, args.c)
        cmp = args.compare or (cf.metadata.get("dual", {}).get("printed"))
        if cmp:
            other = need_operator(resolve(cmp))
            diff = coefficient_diff(out, other)
            report["compared_with"] = cmp
            report["mismatches"] = [f"z^{i} theta^{j}: computed {format_rational(x)}, file {format_rational(y)}"
                                    for i, j, x, y in diff]
            report["flag"] = "mismatch" if diff else "identical"
            ok = not diff
    elif args.kind == "prop7":
        out = prop7_transform_op(op, args.p)
    elif args.kind == "prop8":
        fit = FitConfig(order=op.order, max_zdeg=args.fit_zdeg)
        need = (fit.order + 1) * (fit.max_zdeg + 1) + fit.extra
        A = sequence_from_operator(op, need)
        _, out = prop8_transform(A, args.p, args.r, fit.order, fit.max_zdeg)
        if out is None:
            report["operator"] = None
            emit(args, cf.name, report)
            return 1
    elif args.kind == "sym-sqrt":
        out = symmetric_square_root(op)
    elif args.kind == "lift":
        out = lift_operator(op)
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(args.kind)
    report["operator"] = out.pretty()
    report["order"] = out.order
    report["pass"] = ok
    write_operator(args, f"{cf.name}.{args.kind}", out, {"source": f"{args.kind} of {cf.name}"})
    emit(args, cf.name, report)
    return 0 if ok else 1


# check

def _sequence_of(cf: CaseFile, N: int, label: str = "A") -> list[Fraction]:
    if cf.kind == "sequence":
        return cf.values[:N]
    if cf.kind == "recurrence":
        if label not in cf.initial:
            raise ParseError(f"{cf.name}: no initial values labelled {label!r}")
        return unroll(cf.recurrence, cf.initial[label], N)
    return sequence_from_operator(cf.operator, N)


def _target(expr: str, digits: int):
    import mpmath
    with mpmath.workdps(digits + 20):
        if expr.startswith("zeta(") and expr.endswith(")"):
            return mpmath.nstr(mpmath.zeta(int(expr[5:-1])), digits + 10)
        return expr


def cmd_check(args) -> int:
    cf = resolve(args.file)
    kind = args.kind
    report: dict = {"kind": kind}
    if kind == "realizable":
        A = _sequence_of(cf, args.terms + 1)
        if cf.kind != "sequence":
            A = A[1:]  # drop the constant term
        rep = realizability(A, args.k)
        report.update({"k": args.k, "B": [format_rational(b) for b in rep.B],
                       "first_noninteger_index": rep.first_noninteger_index,
                       "prime_support": sorted(rep.prime_support), "verified_upto": len(A)})
        ok = rep.realizable
    elif kind == "supercongruence":
        A = _sequence_of(cf, args.terms + 1)
        res = supercongruence(A, args.p, args.r, args.k)
        fails = [m for m, h in res if not h]
        report.update({"p": args.p, "r": args.r, "k": args.k, "tested_n": [m for m, _ in res],
                       "failures": fails, "verified_upto": len(A) - 1})
        ok = not fails
    elif kind == "polylog":
        A = _sequence_of(cf, args.terms + 1)
        if cf.kind != "sequence":
            A = A[1:]
        res = polylog_identity_check(A, args.k, len(A))
        bad = [k for k, a in enumerate(res.c) if a != 0]
        report.update({"k": args.k, "nonzero_at": bad, "verified_upto": len(A)})
        ok = not bad
    elif kind == "lcm-bound":
        B = _sequence_of(cf, args.terms + 1, "B")
        bad = denominator_bound_check(B, args.power)
        report.update({"power": args.power, "failures": bad, "verified_upto": len(B) - 1})
        ok = not bad
    elif kind == "zeta-limit":
        n = args.n
        A = _sequence_of(cf, n + 1, "A")
        B = _sequence_of(cf, n + 1, "B")
        target = args.target or cf.metadata.get("limit")
        if not target:
            raise ParseError("no --target and no limit in the case metadata")
        digits = CheckConfig().zeta_digits
        gap, approx = zeta_limit_check(A, B, _target(target, digits), digits)
        import mpmath
        report.update({"n": n, "target": target, "gap": mpmath.nstr(gap, 6),
                       "tolerance": args.tol, "approx": mpmath.nstr(approx, 30)})
        ok = gap < mpmath.mpf(args.tol)
    else:  # pragma: no cover
        raise ParseError(kind)
    report["pass"] = ok
    emit(args, cf.name, report)
    return 0 if ok else 1


# catalog-list

def cmd_catalog_list(args) -> int:
    rows = []
    failed = False
    for name in case_names():
        cf = load_case(name)
        row = {"name": name, "kind": cf.kind, "source": cf.metadata.get("source", "")}
        if cf.operator is not None:
            row["order"] = cf.operator.order
            row["z_degree"] = cf.operator.zdeg
        if args.verify:
            res = check_case(cf)
            row["checks"] = {c: ok for c, ok, _ in res}
            failed |= not all(ok for _, ok, _ in res)
        rows.append(row)
    if args.json:
        sys.stdout.write(json.dumps({"tool": f"cyeq {__version__}", "cases": rows}, indent=1) + "\n")
    else:
        for r in rows:
            extra = f"order {r['order']}, zdeg {r['z_degree']}" if "order" in r else r["kind"]
            line = f"{r['name']:<24} {extra:<20} {r['source']}"
            if "checks" in r:
                line += "  [" + " ".join(f"{c}:{'ok' if v else 'FAIL'}" for c, v in r["checks"].items()) + "]"
            sys.stdout.write(line + "\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyeq", description="Exact Calabi-Yau operator toolkit")
    ap.add_argument("--version", action="version", version=f"cyeq {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    common.add_argument("--report", help="also write the JSON report to this path")
    sub = ap.add_subparsers(dest="cmd", required=True)

    a = sub.add_parser("analyze", parents=[common], help="Frobenius basis, mirror map, coupling, Lambert numbers")
    a.add_argument("file", help="operator file or shipped case name")
    a.add_argument("--order", type=int, default=30)
    a.add_argument("--n0", type=_n0, default="one")
    a.add_argument("--weight", type=int, choices=(2, 3))
    a.add_argument("--rescale", nargs=2, metavar=("C", "M"), type=_rat)
    a.add_argument("--head", type=int, default=8)
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser("hadamard", parents=[common], help="Hadamard product of two operators")
    h.add_argument("a")
    h.add_argument("b", nargs="?")
    h.add_argument("--square", action="store_true")
    mode = h.add_mutually_exclusive_group()
    mode.add_argument("--closed", dest="mode", action="store_const", const="closed")
    mode.add_argument("--meurman", dest="mode", action="store_const", const="meurman")
    h.set_defaults(mode="closed")
    h.add_argument("--terms", type=int, default=40)
    h.add_argument("--fit-order", type=int, default=4)
    h.add_argument("--fit-zdeg", type=int, default=12)
    h.add_argument("--out", help="write the product operator file here")
    h.set_defaults(func=cmd_hadamard)

    t = sub.add_parser("transform", parents=[common], help="operator transforms")
    t.add_argument("file")
    t.add_argument("kind", choices=["exterior-square", "dualize", "prop7", "prop8", "sym-sqrt", "lift"])
    t.add_argument("--c", type=_rat)
    t.add_argument("--p", type=_rat, default=Fraction(1))
    t.add_argument("--r", type=int, default=2)
    t.add_argument("--fit-zdeg", type=int, default=12)
    t.add_argument("--compare", help="operator file to compare a dual against")
    t.add_argument("--out")
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("check", parents=[common], help="arithmetic checks on sequences")
    c.add_argument("file")
    c.add_argument("kind", choices=["realizable", "supercongruence", "polylog", "lcm-bound", "zeta-limit"])
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--p", type=int, default=2)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--n", type=int, default=20)
    c.add_argument("--power", type=int, default=4)
    c.add_argument("--terms", type=int, default=40)
    c.add_argument("--target")
    c.add_argument("--tol", default="1e-65")
    c.set_defaults(func=cmd_check)

    l = sub.add_parser("catalog-list", help="list shipped cases")
    l.add_argument("--json", action="store_true")
    l.add_argument("--verify", action="store_true", help="run each case's tagged checks")
    l.set_defaults(func=cmd_catalog_list)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.cmd == "hadamard" and not args.square and args.b is None:
        ap.error("hadamard needs two operators or --square")
    try:
        return args.func(args)
    except (ParseError, ShapeMismatch, NotASymmetricSquare, NotMUM, DegenerateLeading,
            InsufficientLength, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
