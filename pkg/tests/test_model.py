import copy
import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from catalog import deloop_p, resolve_model, sphere_q
from diagram import Braid, Diagram, Gen, Slice, canonical_braids, compose, identity, moves, single, tensor
from dsl import format_diagram, parse_diagram, parse_script, parse_signature
from errors import InconsistentTables, MalformedTables, ModelError, UnassignedGenerator
from model import (
    Assignment,
    Evaluator,
    default_assignment,
    dumps_model,
    eval1,
    eval2,
    model_from_dict,
    read_model_file,
    tautological,
)
from signature import Gen1, ObjGen, Signature
from twocell import deloop_sigma


@pytest.fixture
def q():
    return sphere_q(window=2)


@pytest.fixture
def tables():
    return copy.deepcopy(deloop_p().data)


# ---------------------------------------------------------------------------
# table models
# ---------------------------------------------------------------------------


def test_deloop_tables_load(tables):
    m = model_from_dict(tables)
    assert m.objects() == ["*"]
    assert m.id1("*") == "0"
    assert m.phi("1", "1") == "-I.0"
    assert m.phi_inv("1", "1") == "-I.0"
    assert m.tensor1("1", "1") == "0"
    assert m.label2("-I.1") == "-I"


def test_missing_table_is_malformed(tables):
    del tables["phi"]
    with pytest.raises(MalformedTables, match="phi"):
        model_from_dict(tables)


def test_unit_outside_the_carrier_is_malformed(tables):
    tables["objects"]["unit"] = "x"
    with pytest.raises(MalformedTables):
        model_from_dict(tables)


def test_interchangor_with_wrong_endpoints_is_inconsistent(tables):
    tables["phi"]["0"]["1"] = "I.0"
    with pytest.raises(InconsistentTables, match=r"phi\(0, 1\)"):
        model_from_dict(tables)


def test_model_file_round_trip(tmp_path):
    m = deloop_p()
    path = tmp_path / "p.json"
    path.write_text(dumps_model(m), encoding="utf-8")
    again = model_from_dict(read_model_file(path))
    assert again.name == "deloop-p"
    assert again.to_dict() == m.to_dict()


def test_bad_json_is_malformed(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json", encoding="utf-8")
    with pytest.raises(MalformedTables, match="not valid JSON"):
        read_model_file(path)
    with pytest.raises(MalformedTables):
        model_from_dict([1, 2])


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def test_default_assignment_in_the_sphere(q, sig):
    a = default_assignment(q, sig)
    assert a.objects == {"a": "1", "b": "1", "c": "1"}
    assert a.gens1 == {"f": "(1,1)", "g": "(1,1)", "h": "(1,1)", "u": "(0,1)"}
    assert a.gens2 == {"alpha": "(1,1,-I)", "kappa": "(1,1,-I)"}


def test_default_assignment_needs_a_fitting_cell(q):
    sig = Signature([ObjGen("a"), ObjGen("b"), ObjGen("c")], [Gen1("m", ("a", "b"), ("c",))])
    with pytest.raises(UnassignedGenerator, match="'m'"):
        default_assignment(q, sig)


def test_eval1_composes_layers(q, sig):
    a = default_assignment(q, sig)
    d = parse_diagram("[1 | f | b] ; [a | g | 1]", sig)
    assert eval1(q, d, a) == (2, 0)
    assert eval1(q, parse_diagram("[a | g | 1]", sig), a) == (2, 1)
    assert eval1(q, parse_diagram("id(a * b)", sig), a) == q.id1(2)


def test_interchange_evaluates_to_the_koszul_sign(q, sig):
    a = default_assignment(q, sig)
    s = parse_script("src [a | g | 1] ; [1 | f | b]; cells: interchange@0", sig)
    value = eval2(q, s, a)
    assert value == (2, 0, -1)
    assert q.label2(value) == "-I"
    back = parse_script("src [1 | f | b] ; [a | g | 1]; cells: interchange@0 back", sig)
    assert eval2(q, back, a) == (2, 0, -1)


def test_generator_cells_evaluate_to_their_assignment(q, sig):
    a = default_assignment(q, sig)
    s = parse_script("src [1 | f | 1]; cells: gen2:alpha@0", sig)
    assert eval2(q, s, a) == (1, 1, -1)
    s = parse_script("src [1 | f | b]; cells: gen2:alpha@0 r=b ; gen2:alpha@0 r=b back", sig)
    assert eval2(q, s, a) == (2, 1, 1)


def test_structural_moves_evaluate_to_identities(q, sig):
    a = default_assignment(q, sig)
    s = parse_script("src [1 | f | b] ; [1 | swap(a, b) | 1]; cells: move:nat-up@0:1", sig)
    assert q.is_identity2(eval2(q, s, a))


def test_unassigned_and_mismatched_generators(q):
    f = single((), Gen("f", ("a",), ("a",)))
    with pytest.raises(UnassignedGenerator):
        eval1(q, f, Assignment())
    with pytest.raises(ModelError, match="wrong endpoints"):
        eval1(q, f, Assignment({"a": "1"}, {"f": "(2,1)"}))
    with pytest.raises(ModelError):
        eval1(q, f, Assignment({"a": "1"}, {"f": "bogus"}))


def test_assignment_from_dict():
    a = Assignment.from_dict({"objects": {"a": 1}, "gens1": {"f": "(1,1)"}})
    assert a.objects == {"a": "1"}
    assert a.to_dict() == {"objects": {"a": "1"}, "gens1": {"f": "(1,1)"}, "gens2": {}}


def test_assignment_stored_in_a_model_file(tables, sig):
    tables["assignment"] = {"objects": {"a": "*"}, "gens1": {"f": "1"}}
    m = model_from_dict(tables)
    assert Evaluator(m).eval1(parse_diagram("[1 | f | 1] ; [1 | f | 1]", sig)) == "0"


# ---------------------------------------------------------------------------
# the model presenting itself
# ---------------------------------------------------------------------------


def test_presentation_of_the_deloop():
    m = deloop_p()
    p = tautological(m)
    assert p.word("*") == ()
    assert p.diagram("0").slices == ()
    one = p.diagram("1")
    assert p.eval1(one) == "1"
    assert [g.id for g in p.signature().gens1] == ["1"]
    assert p.eval2(deloop_sigma(one, one)) == "-I.0"


# ---------------------------------------------------------------------------
# evaluation respects equality and composition
# ---------------------------------------------------------------------------

SIG = parse_signature((Path(__file__).parent / "fixtures" / "basic.sig").read_text(encoding="utf-8"))


def _next_slices(w, sig=SIG):
    """Every slice that can sit on the word ``w``; the unit generator only at the left."""
    out = [Slice(w[:i], Braid(w[i], w[i + 1]), w[i + 2:]) for i in range(len(w) - 1)]
    for g in sig.gens1:
        n = len(g.dom)
        if not n:
            out.append(Slice((), sig.body(g.id), w))
            continue
        for i in range(len(w) - n + 1):
            if w[i:i + n] == g.dom:
                out.append(Slice(w[:i], sig.body(g.id), w[i + n:]))
    return out


def _small_diagrams(max_slices: int = 3):
    """Every diagram on a word of two or three letters in a and b with at most ``max_slices`` slices."""
    level = [identity(w) for n in (2, 3) for w in itertools.product("ab", repeat=n)]
    out = list(level)
    for _ in range(max_slices):
        level = [Diagram(d.src, d.slices + (sl,)) for d in level for sl in _next_slices(d.tgt)]
        out += level
    return out


SMALL_DIAGRAMS = _small_diagrams()


@pytest.mark.parametrize("name, braiding", [("q", "sum"), ("q", "product"), ("deloop-p", None)])
def test_moves_do_not_change_values(name, braiding):
    m = resolve_model(name, window=2, braiding=braiding)
    ev = Evaluator(m, default_assignment(m, SIG))
    seen = {}

    def value(d):
        if d not in seen:
            seen[d] = ev.eval1(d)
        return seen[d]

    for d in SMALL_DIAGRAMS:
        for out, mv in moves(d):
            assert value(out) == value(d), (format_diagram(d), str(mv))
        if len(d) <= 2:
            assert value(canonical_braids(d)) == value(d), format_diagram(d)


@st.composite
def chains(draw, start):
    """Up to three slices stacked on ``start``."""
    d = identity(tuple(start))
    for _ in range(draw(st.integers(min_value=0, max_value=3))):
        d = Diagram(d.src, d.slices + (draw(st.sampled_from(_next_slices(d.tgt))),))
    return d


words = st.lists(st.sampled_from("ab"), min_size=1, max_size=3)


@pytest.mark.parametrize("name, braiding", [("q", "product"), ("deloop-p", None)])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_eval1_is_functorial(name, braiding, data):
    m = resolve_model(name, braiding=braiding)
    ev = Evaluator(m, default_assignment(m, SIG))
    d1 = data.draw(words.flatmap(chains))
    d2 = data.draw(chains(d1.tgt))
    d3 = data.draw(words.flatmap(chains))
    assert ev.eval1(compose(d1, d2)) == m.comp1(ev.eval1(d1), ev.eval1(d2))
    assert ev.eval1(tensor(d1, d3)) == m.tensor1(ev.eval1(d1), ev.eval1(d3))
