"""The shipped case library (JSON files under cyeq/data) and its self-checks."""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .diffop import frobenius_basis, unroll
from .files import CaseFile, ParseError, parse, parse_rational
from .mum import instanton_numbers, mirror_map, rescale_coupling, yukawa
from .transforms import coefficient_diff, dualize
from .wronskian import exterior_square

DATA = "data"


def case_names() -> list[str]:
    root = resources.files(__package__) / DATA
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_case(name: str) -> CaseFile:
    path = resources.files(__package__) / DATA / f"{name}.json"
    if not path.is_file():
        raise ParseError(f"no library case named {name!r}")
    return parse(json.loads(path.read_text()))


def _rats(xs) -> list[Fraction]:
    return [parse_rational(x) for x in xs]


def check_case(cf: CaseFile) -> list[tuple[str, bool, str]]:
    """Run the checks tagged in the case metadata; (check, ok, detail) triples."""
    meta = cf.metadata
    out: list[tuple[str, bool, str]] = []
    if cf.kind == "operator":
        op = cf.operator
        out.append(("canonical", op == op.canonical(), ""))
        need = 2
        if "y0_head" in meta:
            need = max(need, len(meta["y0_head"]))
        if "z_of_q_head" in meta:
            need = max(need, len(meta["z_of_q_head"]))
        if "lambert" in meta:
            lm = meta["lambert"]
            need = max(need, lm.get("m", 1) * (len(lm["head"]) + 1) + 1)
        basis = None
        if any(k in meta for k in ("y0_head", "z_of_q_head", "lambert")):
            basis = frobenius_basis(op, need)
        if "y0_head" in meta:
            want = _rats(meta["y0_head"])
            got = list(basis[0].parts[0].c[:len(want)])
            out.append(("y0_head", got == want, ""))
        if "z_of_q_head" in meta or "lambert" in meta:
            mirror = mirror_map(basis)
        if "z_of_q_head" in meta:
            want = _rats(meta["z_of_q_head"])
            got = list(mirror.z_of_q().c[:len(want)])
            out.append(("z_of_q_head", got == want, ""))
        if "lambert" in meta:
            lm = meta["lambert"]
            K = yukawa(basis, mirror)
            if "rescale" in lm:
                c, m = lm["rescale"]
                K = rescale_coupling(K, parse_rational(c), int(m))
            n0 = lm.get("n0", "one")
            lam = instanton_numbers(K, lm["weight"], n0)
            want = _rats(lm["head"])
            got = list(lam.coeffs[:len(want)])
            bad = [i + 1 for i, (a, b) in enumerate(zip(got, want)) if a != b]
            out.append(("lambert", not bad and len(got) == len(want),
                        f"differs at l={bad}" if bad else ""))
        if "exterior_square" in meta:
            target = load_case(meta["exterior_square"]).operator
            out.append(("exterior_square", exterior_square(op) == target.canonical(), meta["exterior_square"]))
        if "dual" in meta:
            dm = meta["dual"]
            printed = load_case(dm["printed"]).operator
            diff = coefficient_diff(dualize(op, parse_rational(dm["c"])), printed)
            spots = sorted([i, j] for i, j, _, _ in diff)
            known = sorted(dm.get("known_mismatch", []))
            out.append(("dual", spots == known,
                        f"mismatch at (z^i, theta^j) {spots}" if spots else ""))
    elif cf.kind == "recurrence":
        for label, head in meta.get("heads", {}).items():
            want = _rats(head)
            got = unroll(cf.recurrence, cf.initial[label], len(want))
            out.append((f"unroll[{label}]", got == want, ""))
    elif cf.kind == "sequence":
        out.append(("nonempty", bool(cf.values), ""))
    return out
