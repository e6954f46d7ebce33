import json
import subprocess
import sys

import pytest

from cyeq.cli import main
from cyeq.files import load, save, sequence_doc


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text_and_json(capsys):
    code, text, _ = run(capsys, "analyze", "zeta4_pullback", "--n0", "auto", "--order", "12")
    assert code == 0
    assert "  lambert.numbers: -132, -1995, -52204, -1743900" in text
    code, js, _ = run(capsys, "analyze", "zeta4_pullback", "--n0", "auto", "--order", "12", "--json")
    doc = json.loads(js)
    assert doc["name"] == "zeta4_pullback" and doc["report"]["lambert"]["N0"] == 4


def test_reports_are_deterministic(capsys):
    a = run(capsys, "analyze", "case9s", "--order", "10")
    b = run(capsys, "analyze", "case9s", "--order", "10")
    assert a == b


def test_analyze_rescale(capsys):
    code, text, _ = run(capsys, "analyze", "km_product", "--order", "10", "--rescale", "1/3", "1")
    assert code == 0 and "rescaled.c: 1/3" in text


def test_hadamard_closed_and_out_file(capsys, tmp_path):
    out = tmp_path / "prod.json"
    code, text, _ = run(capsys, "hadamard", "ord2_b", "hyp2_A", "--out", str(out))
    assert code == 0 and "annihilation_failures: -" in text
    assert load(out).operator.order == 4


def test_hadamard_square_and_meurman(capsys):
    code, text, _ = run(capsys, "hadamard", "ord2_m", "--square")
    assert code == 0 and "pass: True" in text
    code, js, _ = run(capsys, "hadamard", "ord2_k", "ord2_m", "--meurman", "--fit-zdeg", "8", "--json")
    rep = json.loads(js)["report"]
    assert code == 0 and rep["recurrence_depth"] == 4 and rep["recurrence_reproduces_product"]


def test_hadamard_shape_mismatch(capsys):
    code, _, err = run(capsys, "hadamard", "ord3_alpha", "ord2_h")
    assert code == 2 and "error:" in err


def test_transform_dualize_flags_printed_typo(capsys):
    code, text, _ = run(capsys, "transform", "case124", "dualize", "--c", "3^-5")
    assert code == 1
    assert "flag: mismatch" in text and "z^4 theta^2" in text
    code, text, _ = run(capsys, "transform", "case55", "dualize", "--c", "2^-18")
    assert code == 0 and "flag: identical" in text


def test_transform_kinds(capsys):
    code, text, _ = run(capsys, "transform", "zeta4_pullback", "exterior-square", "--json")
    assert code == 0 and json.loads(text)["report"]["order"] == 5
    code, text, _ = run(capsys, "transform", "ord3_alpha", "sym-sqrt")
    assert code == 0 and "order: 2" in text
    code, text, _ = run(capsys, "transform", "ord3_alpha", "lift")
    assert code == 0 and "order: 4" in text
    code, text, _ = run(capsys, "transform", "quintic", "prop7", "--p", "3")
    assert code == 0
    code, _, err = run(capsys, "transform", "quintic", "sym-sqrt")
    assert code == 2


def test_check_realizable_sequence_file(capsys, tmp_path):
    p = tmp_path / "ex.json"
    save(p, sequence_doc("ex", [1, 5, 7, 17, 31, 65]))
    code, text, _ = run(capsys, "check", str(p), "realizable", "--k", "1", "--terms", "6")
    assert code == 0 and "B: 1, 2, 2, 3, 6, 9" in text
    save(p, sequence_doc("ex", [1, 2]))
    code, _, _ = run(capsys, "check", str(p), "realizable", "--terms", "2")
    assert code == 1


def test_check_zeta_limit_and_supercongruence(capsys):
    code, text, _ = run(capsys, "check", "zeta4_recurrence", "zeta-limit", "--n", "20")
    assert code == 0 and "target: zeta(4)" in text
    code, text, _ = run(capsys, "check", "zeta4_order5", "supercongruence", "--p", "5", "--r", "1", "--k", "3",
                        "--terms", "30")
    assert code == 0
    code, text, _ = run(capsys, "check", "zeta4_recurrence", "lcm-bound", "--power", "3", "--terms", "20")
    assert code == 1


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "none.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "b", "form": "theta", "coeffs": [["x"]]}')
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", "no_such_case")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["hadamard", "ord2_a"])
    assert e.value.code == 2


def test_catalog_list(capsys):
    code, text, _ = run(capsys, "catalog-list", "--json")
    names = [c["name"] for c in json.loads(text)["cases"]]
    assert code == 0 and "zeta4_order5" in names and len(names) >= 50


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cyeq", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("cyeq ")
