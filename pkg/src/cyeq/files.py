"""JSON file formats for operators, sequences and recurrences.

Every number is stored exactly, as an integer or a "p/q" string.

operator:   {"name", "kind": "operator", "form": "theta"|"dz", "coeffs", "metadata"}
            theta form: coeffs[i][j] is the coefficient of z^i theta^j
            dz form:    coeffs[k][e] is the coefficient of z^e (d/dz)^k
sequence:   {"name", "kind": "sequence", "values", "metadata"}
recurrence: {"name", "kind": "recurrence", "shift_coeffs", "start", "initial", "metadata"}
            shift_coeffs[j][e] is the coefficient of n^e in c_j(n), where
            sum_j c_j(n) A_{n+j} = 0 for n >= start; initial maps labels to seeds
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .diffop import Recurrence, ThetaOperator, dz_from_polys, dz_to_theta
from .poly import Poly


class ParseError(ValueError):
    pass


_RAT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_POW = re.compile(r"^\s*([+-]?\d+)\s*\^\s*([+-]?\d+)\s*$")


def parse_rational(x) -> Fraction:
    """Integer, "p/q", or "a^b" (b may be negative)."""
    if isinstance(x, bool):
        raise ParseError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        m = _RAT.match(x)
        if m:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ParseError(f"zero denominator in {x!r}")
            return Fraction(int(m.group(1)), den)
        m = _POW.match(x)
        if m:
            base, e = int(m.group(1)), int(m.group(2))
            if base == 0 and e < 0:
                raise ParseError(f"zero to a negative power in {x!r}")
            return Fraction(base) ** e
    raise ParseError(f"not an exact rational: {x!r}")


def format_rational(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rows(obj, what: str) -> list[list[Fraction]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(f"{what} must be a list of lists")
    return [[parse_rational(a) for a in r] for r in obj]


def _poly_rows(rows) -> list[list]:
    return [[format_rational(a) for a in p.c] if not p.is_zero() else [] for p in rows]


@dataclass
class CaseFile:
    name: str
    kind: str  # operator | sequence | recurrence
    operator: ThetaOperator | None = None
    values: list[Fraction] | None = None
    recurrence: Recurrence | None = None
    initial: dict[str, list[Fraction]] = field(default_factory=dict)
    metadata: dict[str, Any] = field(default_factory=dict)


def parse(doc: dict) -> CaseFile:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError("missing name")
    kind = doc.get("kind", "operator")
    meta = doc.get("metadata")
    meta = {} if meta is None else meta
    if not isinstance(meta, dict):
        raise ParseError("metadata must be an object")
    if kind == "operator":
        form = doc.get("form")
        rows = _rows(doc.get("coeffs"), "coeffs")
        if not rows:
            raise ParseError("empty coefficient table")
        if form == "theta":
            op = ThetaOperator([Poly(r) for r in rows])
        elif form == "dz":
            op = dz_to_theta(dz_from_polys(rows))
        else:
            raise ParseError(f"unknown operator form {form!r}")
        if op.order < 1:
            raise ParseError("operator has order 0")
        return CaseFile(name, kind, operator=op, metadata=meta)
    if kind == "sequence":
        vals = doc.get("values")
        if not isinstance(vals, list) or not vals:
            raise ParseError("sequence needs a nonempty values list")
        return CaseFile(name, kind, values=[parse_rational(v) for v in vals], metadata=meta)
    if kind == "recurrence":
        rows = _rows(doc.get("shift_coeffs"), "shift_coeffs")
        start = doc.get("start", 0)
        if not isinstance(start, int):
            raise ParseError("start must be an integer")
        init = doc.get("initial")
        init = {} if init is None else init
        if not isinstance(init, dict):
            raise ParseError("initial must map labels to value lists")
        initial = {k: [parse_rational(v) for v in vs] for k, vs in init.items()}
        rec = Recurrence.from_shift_form([Poly(r) for r in rows], start)
        return CaseFile(name, kind, recurrence=rec, initial=initial, metadata=meta)
    raise ParseError(f"unknown kind {kind!r}")


def load(path) -> CaseFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(str(e)) from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e}") from e
    return parse(doc)


def operator_doc(name: str, op: ThetaOperator, metadata: dict | None = None) -> dict:
    op = op.canonical()
    return {"name": name, "kind": "operator", "form": "theta",
            "coeffs": _poly_rows(op.coeffs), "metadata": metadata or {}}


def sequence_doc(name: str, values, metadata: dict | None = None) -> dict:
    return {"name": name, "kind": "sequence", "values": [format_rational(v) for v in values],
            "metadata": metadata or {}}


def recurrence_doc(name: str, shift_coeffs, start: int = 0, initial: dict | None = None,
                   metadata: dict | None = None) -> dict:
    polys = [c if isinstance(c, Poly) else Poly(c) for c in shift_coeffs]
    return {"name": name, "kind": "recurrence", "shift_coeffs": _poly_rows(polys), "start": start,
            "initial": {k: [format_rational(v) for v in vs] for k, vs in (initial or {}).items()},
            "metadata": metadata or {}}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def save(path, doc: dict) -> None:
    Path(path).write_text(dumps(doc))
