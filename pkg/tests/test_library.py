from fractions import Fraction

import pytest

from cyeq import catalog as cat
from cyeq.analysis import analyze_operator, format_report
from cyeq.config import AnalysisConfig
from cyeq.diffop import THETA, ThetaOperator
from cyeq.files import ParseError, operator_doc, parse
from cyeq.library import case_names, check_case, load_case

NAMES = case_names()


def test_library_is_complete():
    for name in ("zeta4_order5", "zeta4_pullback", "case9s", "case9ss", "case14s", "case2s", "case55",
                 "case124", "case124_dual_printed", "km_product", "sixth_order", "zeta4_recurrence",
                 "zeta35_recurrence", "binom6_recurrence", "guillera1_order4", "ord3_kappa", "hyp2_D"):
        assert name in NAMES
    assert load_case("case2s").metadata["status"] == "unsupported-arithmetic"
    with pytest.raises(ParseError):
        load_case("no_such_case")


@pytest.mark.parametrize("name", NAMES)
def test_case_round_trips_and_self_checks(name):
    cf = load_case(name)
    if cf.kind == "operator":
        again = parse(operator_doc(name, cf.operator, cf.metadata))
        assert again.operator == cf.operator == cf.operator.canonical()
    results = check_case(cf)
    assert results
    failed = [(c, d) for c, ok, d in results if not ok]
    assert not failed, failed


def test_catalog_matches_library():
    assert load_case("quintic").operator == cat.HYPERGEOMETRIC_QUINTIC.canonical()
    assert load_case("ord2_m").operator == cat.SECOND_ORDER["m"].canonical()


def test_analysis_report_quintic():
    rep = analyze_operator(cat.HYPERGEOMETRIC_QUINTIC, AnalysisConfig(order=8, n0=5))
    assert rep["mum"] and rep["condition22"]
    assert rep["lambert"]["numbers"][:3] == [2875, 609250, 317206375]
    assert rep["mirror"]["q_over_z"][:2] == [1, 770]
    text = format_report("quintic", rep)
    assert text.splitlines()[0] == "case: quintic"
    assert "  lambert.numbers: 2875, 609250, 317206375" in text


def test_analysis_non_mum():
    T = THETA
    rep = analyze_operator(ThetaOperator([T * (T - 1), -(T + 1) ** 2]))
    assert not rep["mum"] and "note" in rep and "y0" not in rep
    assert rep["exponents"] == [0, 1]


def test_analysis_weight_and_rescale():
    cfg = AnalysisConfig(order=10, rescale=(Fraction(1, 3), 1))
    rep = analyze_operator(cat.KM_PRODUCT, cfg)
    assert rep["lambert"]["weight"] == 3
    assert rep["lambert"]["numbers"][:3] == [-48, -426, -2864]
    assert AnalysisConfig().weight_for(5) == 2 and AnalysisConfig().weight_for(4) == 3
