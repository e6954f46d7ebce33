"""End-to-end analysis of one operator, returned as a plain JSON-able dict."""
from __future__ import annotations

from fractions import Fraction

from .arithmetic import prime_support
from .config import AnalysisConfig
from .diffop import ThetaOperator, frobenius_basis, indicial_polynomial, is_mum, local_exponents
from .files import format_rational
from .mum import condition22, instanton_numbers, mirror_map, rescale_coupling, yukawa
from .series import PowerSeries, largest_integral_root


def _head(f: PowerSeries, n: int) -> list:
    return [format_rational(a) for a in f.c[:n]]


def _lambert_report(lam, n: int) -> dict:
    nums = list(lam.coeffs)
    return {
        "weight": lam.weight,
        "N0": format_rational(lam.N0),
        "numbers": [format_rational(a) for a in nums[:n]],
        "count": len(nums),
        "integral": lam.is_integral(),
        "first_nonintegral": lam.first_nonintegral(),
        "prime_support": prime_support(nums),
    }


def analyze_operator(op: ThetaOperator, cfg: AnalysisConfig = AnalysisConfig()) -> dict:
    op = op.canonical()
    s = op.order
    rep: dict = {
        "order": s,
        "z_degree": op.zdeg,
        "indicial": [format_rational(a) for a in indicial_polynomial(op).c],
        "exponents": [format_rational(e) for e in local_exponents(op)],
        "mum": is_mum(op),
    }
    if s == 4:
        ok, _ = condition22(op)
        rep["condition22"] = ok
    if not rep["mum"]:
        rep["note"] = "not MUM at z=0; indicial data only"
        return rep
    basis = frobenius_basis(op, cfg.order)
    y0 = basis[0].parts[0]
    rep["y0"] = {
        "head": _head(y0, cfg.head),
        "integral": y0.is_integral(),
        "prime_support": prime_support(y0.c),
        "root": largest_integral_root(y0, cfg.root_limit),
    }
    if s < 2:
        return rep
    mirror = mirror_map(basis)
    rep["mirror"] = {
        "q_over_z": _head(mirror.q_over_z, cfg.head),
        "q_over_z_root": largest_integral_root(mirror.q_over_z, cfg.root_limit),
        "z_of_q": _head(mirror.z_of_q(), cfg.head + 1),
        "integral": mirror.q_over_z.is_integral(),
        "prime_support": prime_support(mirror.q_over_z.c),
    }
    if s < 3:
        return rep
    K = yukawa(basis, mirror)
    rep["coupling"] = {"head": _head(K, cfg.head), "integral": K.is_integral(),
                       "prime_support": prime_support(K.c)}
    if s < 4:
        return rep
    if cfg.rescale is not None:
        c, m = cfg.rescale
        K = rescale_coupling(K, c, m)
        rep["rescaled"] = {"c": format_rational(c), "m": m, "head": _head(K, cfg.head)}
    w = cfg.weight_for(s)
    lam = instanton_numbers(K, w, cfg.n0)
    rep["lambert"] = _lambert_report(lam, cfg.head)
    return rep


def format_report(name: str, rep: dict) -> str:
    """Plain-text rendering, one "key: value" line per leaf, nested keys dotted."""
    lines = [f"case: {name}"]

    def emit(prefix: str, obj: dict):
        for k, v in obj.items():
            if isinstance(v, dict):
                emit(f"{prefix}{k}.", v)
            else:
                lines.append(f"  {prefix}{k}: {_fmt(v)}")

    emit("", rep)
    return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, list):
        return ", ".join(str(x) for x in v) if v else "-"
    if isinstance(v, Fraction):
        return str(format_rational(v))
    return str(v)
