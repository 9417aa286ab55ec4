import json

import pytest

from catalog import (
    KOSZUL,
    SphereQ,
    check_smc,
    deloop,
    deloop_p,
    loop,
    picard_p,
    resolve_model,
    sphere_q,
)
from errors import MalformedTables, ModelError, NotOneObject
from model import dumps_model


def test_koszul_sign_table():
    assert KOSZUL.tolist() == [[1, 1], [1, -1]]


def test_picard_category_is_symmetric_monoidal():
    report = check_smc(picard_p())
    assert report.passed, report.format_text()
    assert report.result("smc.naturality").instances == 16
    assert picard_p().braiding["1"]["1"] == "-I.0"


def test_smc_with_missing_entries_is_malformed():
    p = picard_p()
    del p.braiding["1"]["0"]
    with pytest.raises(MalformedTables):
        check_smc(p)


def test_a_symmetry_that_is_not_involutive():
    p = picard_p()
    p.braiding["0"]["1"] = "-I.1"
    report = check_smc(p)
    assert {r.axiom for r in report.failed()} == {"smc.symmetry"}


def test_loop_undoes_deloop():
    p = picard_p()
    m = deloop(p)
    assert m.name == "deloop(P)"
    assert m.phi("0", "1") == "I.1"
    assert loop(m) == p


def test_loop_needs_one_object():
    with pytest.raises(NotOneObject):
        loop(sphere_q())


def test_sphere_cells():
    q = sphere_q()
    assert q.name == "Q[literal, sum]"
    assert q.objects() == [-2, -1, 0, 1, 2]
    assert q.hom1(1, 2) == []
    assert q.comp1((1, 1), (1, 1)) == (1, 0)
    assert q.phi((1, 1), (2, 1)) == (3, 0, -1)
    assert q.phi((1, 0), (2, 1)) == (3, 1, 1)
    assert q.cell1("(1, 1)") == (1, 1)
    assert q.cell2("(-2,0,-I)") == (-2, 0, -1)
    assert q.name2((2, 0, -1)) == "(2,0,-I)"
    with pytest.raises(ModelError):
        q.cell1("(1,2)")
    with pytest.raises(ModelError):
        q.comp1((1, 1), (2, 1))


@pytest.mark.parametrize(
    "braiding, beta, braidings",
    [("sum", (3, 1), [(3, 1), (2, 0)]), ("product", (3, 0), [(3, 0), (2, 0), (2, 1)])],
)
def test_sphere_braidings(braiding, beta, braidings):
    q = sphere_q(braiding=braiding)
    assert q.beta(1, 2) == beta
    assert all(q.is_braiding(f) for f in braidings)
    assert not q.is_braiding((3, 1 - beta[1]))


def test_braid_trivial_interchangor():
    q = sphere_q(variant="braid-trivial")
    assert q.phi((1, 1), (1, 1)) == (2, 0, 1)
    assert q.phi((0, 1), (0, 1)) == (0, 0, -1)


@pytest.mark.parametrize("kwargs", [{"window": 0}, {"variant": "loose"}, {"braiding": "xor"}])
def test_sphere_rejects_bad_parameters(kwargs):
    with pytest.raises(ModelError):
        SphereQ(**kwargs)


def test_resolve_builtin_models():
    q = resolve_model("q", window=1, braiding="product")
    assert (q.window, q.variant, q.braiding) == (1, "literal", "product")
    assert resolve_model("deloop-p").name == "deloop-p"
    with pytest.raises(ModelError, match="no built-in model or file"):
        resolve_model("no-such-model")


def test_resolve_model_files(tmp_path):
    tables = tmp_path / "p.json"
    tables.write_text(dumps_model(deloop_p()), encoding="utf-8")
    assert resolve_model(str(tables)).phi("1", "1") == "-I.0"

    example = tmp_path / "q.json"
    example.write_text(json.dumps({"example": {"name": "q", "window": 1, "variant": "braid-trivial"}}))
    m = resolve_model(str(example), braiding="product")
    assert m.name == "Q[braid-trivial, product]"
    assert m.window == 1

    assert json.loads(dumps_model(resolve_model(str(example)))) == {
        "example": {"name": "q", "window": 1, "variant": "braid-trivial", "braiding": "sum"}
    }


def test_unknown_example_name(tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"example": {"name": "sphere"}}))
    with pytest.raises(ModelError, match="unknown example"):
        resolve_model(str(path))
