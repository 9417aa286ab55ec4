import json

import pytest

from catalog import resolve_model
from cli import run
from dsl import format_signature

INTERCHANGE = "src [a | g | 1] ; [1 | f | b]; cells: interchange@0"


@pytest.fixture
def sig_arg(sig_path):
    return ["--sig", str(sig_path)]


def test_parse_prints_the_canonical_text(sig_path, sig, capsys):
    assert run(["parse", str(sig_path)]) == 0
    assert capsys.readouterr().out == format_signature(sig)


def test_check_equal_verdicts(sig_arg, capsys):
    cancel = "[1 | swap(a, b) | 1] ; [1 | swap(b, a) | 1]"
    assert run(["check-equal", cancel, "id(a * b)", "--trace"] + sig_arg) == 0
    assert capsys.readouterr().out == "true\n1 moves\nbraid-cancel@0\n"

    assert run(["check-equal", "[1 | f | b] ; [a | g | 1]", "[a | g | 1] ; [1 | f | b]"] + sig_arg) == 1
    assert capsys.readouterr().out == "false\n"

    padded = f"{cancel} ; [1 | f | b] ; {cancel}"
    assert run(["check-equal", padded, "[1 | f | b]", "--budget", "1"] + sig_arg) == 2
    assert capsys.readouterr().out == "unknown\n"


def test_bad_input_exits_3(sig_arg, capsys):
    assert run(["check-equal", "[1 | f", "id(a)"] + sig_arg) == 3
    assert "syntax error at line 1" in capsys.readouterr().err
    assert run(["apply", "id(a)"] + sig_arg) == 3
    assert run(["no-such-command"]) == 3


def test_apply_and_normalize(sig_arg, capsys):
    assert run(["apply", INTERCHANGE] + sig_arg) == 0
    assert capsys.readouterr().out == "[1 | f | b] ; [a | g | 1]\n"
    assert run(["normalize", "[1 | f | b] ; [1 | swap(a, b) | 1]"] + sig_arg) == 0
    assert capsys.readouterr().out == "[1 | swap(a, b) | 1] ; [b | f | 1]\n"


@pytest.mark.parametrize("model", ["q", "deloop-p"])
def test_eval_interchange(model, sig_arg, capsys):
    assert run(["eval", INTERCHANGE, "--model", model] + sig_arg) == 0
    assert capsys.readouterr().out == "-I\n"


def test_eval_with_an_assignment_file(tmp_path, sig_arg, capsys):
    path = tmp_path / "assign.json"
    path.write_text(json.dumps({"objects": {"a": "1", "b": "1"}, "gens1": {"f": "(1,0)", "g": "(1,1)"}}))
    assert run(["eval", INTERCHANGE, "--assign", str(path)] + sig_arg) == 0
    assert capsys.readouterr().out == "I\n"
    assert run(["eval", "[1 | f | b] ; [a | g | 1]", "--assign", str(path)] + sig_arg) == 0
    assert capsys.readouterr().out == "(2,1)\n"

    path.write_text("[not an assignment")
    assert run(["eval", INTERCHANGE, "--assign", str(path)] + sig_arg) == 3


def test_check_axioms(tmp_path, capsys):
    pdf = tmp_path / "report.pdf"
    assert run(["check-axioms", "--model", "deloop-p", "--pdf", str(pdf)]) == 0
    out = capsys.readouterr().out
    assert "PASS  QS.1" in out
    assert out.endswith("summary: all axioms hold\n")
    assert pdf.exists()

    assert run(["check-axioms", "--window", "1"]) == 1
    out = capsys.readouterr().out
    assert "FAIL  symmetric.iv" in out
    assert "quasistrict checks skipped" in out


def test_derive_phi(capsys):
    assert run(["derive-phi", "1", "1", "1", "1", "--model", "deloop-p"]) == 0
    assert capsys.readouterr().out == "-I.0  -I\n"
    assert run(["derive-phi", "1", "1", "1", "1", "--model", "deloop-p", "--script"]) == 0
    assert capsys.readouterr().out.startswith("src [1 | 1 | 1] ; [1 | 1 | 1] ; [1 | 1 | 1] ; [1 | 1 | 1]\n")


def test_derive_beta(capsys):
    assert run(["derive-beta", "(1,1)", "(1,0)", "--window", "1"]) == 0
    assert capsys.readouterr().out == "(2,1,I)  I\n"


def test_convert(tmp_path, capsys):
    assert run(["convert", "--to", "quasistrict", "--model", "deloop-p"]) == 0
    out = capsys.readouterr().out
    assert "Phi 1 1 1 1 = -I.0" in out
    assert out.endswith("round trip: identical\n")

    assert run(["convert", "--to", "quasistrict", "--window", "1"]) == 1
    assert "use force" in capsys.readouterr().err
    assert run(["convert", "--to", "quasistrict", "--window", "1", "--force"]) == 0
    out = capsys.readouterr().out
    assert "beta (0,0) (1,0) = missing\n" in out
    assert out.endswith("round trip: identical\n")

    path = tmp_path / "p.json"
    assert run(["convert", "--to", "model", "--model", "deloop-p", "--out", str(path)]) == 0
    assert resolve_model(str(path)).phi("1", "1") == "-I.0"


def test_render(sig_arg, golden, capsys):
    assert run(["render", "[1 | swap(a, b) | 1]"] + sig_arg) == 0
    assert capsys.readouterr().out == golden("swap_ab.txt")
    assert run(["render", INTERCHANGE, "--format", "tikz"] + sig_arg) == 0
    assert capsys.readouterr().out.startswith("% step 0: interchange@0\n")
