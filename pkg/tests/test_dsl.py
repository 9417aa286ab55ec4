from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from catalog import deloop_p
from diagram import Braid, Diagram, Gen, Move, MoveKind, Slice, identity, single, tensor
from dsl import (
    format_diagram,
    format_script,
    format_signature,
    parse_diagram,
    parse_dsl,
    parse_script,
    parse_signature,
)
from errors import DSLSyntaxError, EndpointMismatch, SignatureError, UnknownReference
from model import Assignment, eval2
from signature import Signature
from twocell import GenCell, Interchange, Script, StructMove, deloop_sigma, replay

F = Gen("f", ("a",), ("a",))
G = Gen("g", ("b",), ("b",))


def test_diagram_syntax(sig):
    assert parse_diagram("[1 | f | b] ; [a | g | 1]", sig) == tensor(single((), F), single((), G))
    assert parse_diagram("id(1)", sig) == identity(())
    assert parse_diagram("id(a * b)  # two wires", sig) == identity(("a", "b"))
    d = parse_diagram("[1 | swap(a, b) | c]", sig)
    assert d.slices == (Slice((), Braid("a", "b"), ("c",)),)


def test_diagrams_without_a_signature():
    assert parse_diagram("[x | swap(y, z) | 1]").tgt == ("x", "z", "y")
    with pytest.raises(UnknownReference):
        parse_diagram("[1 | f | 1]")


@pytest.mark.parametrize("text", ["[1 | k | 1]", "[1 | f | d]", "id(a * e)"])
def test_unknown_names(sig, text):
    with pytest.raises(UnknownReference):
        parse_diagram(text, sig)


def test_slices_must_chain(sig):
    with pytest.raises(EndpointMismatch):
        parse_diagram("[1 | f | 1] ; [1 | g | 1]", sig)


def test_syntax_error_position(sig):
    with pytest.raises(DSLSyntaxError) as info:
        parse_diagram("[1 | f | b] ]", sig)
    assert (info.value.line, info.value.column) == (1, 13)


def test_keywords_are_not_identifiers():
    with pytest.raises(DSLSyntaxError) as info:
        parse_signature("obj id")
    assert (info.value.line, info.value.column) == (1, 5)


def test_incomplete_declaration_reports_its_line():
    with pytest.raises(DSLSyntaxError) as info:
        parse_signature("obj a\ngen f : a ->")
    assert info.value.line == 2


def test_errors_on_later_lines_keep_the_offending_token():
    with pytest.raises(DSLSyntaxError) as info:
        parse_signature("obj a\nobj id")
    assert (info.value.line, info.value.column) == (2, 5)
    assert info.value.got == "id"
    assert "got 'id'" in str(info.value)


def test_signature_file(sig, sig_path):
    assert [o.id for o in sig.objects] == ["a", "b", "c"]
    assert [g.id for g in sig.gens1] == ["f", "g", "h", "u"]
    assert sig.gen2("alpha").src == single((), F)
    assert parse_signature(format_signature(sig)) == sig
    assert parse_dsl(sig_path.read_text()) == sig


def test_signature_declarations_must_come_first():
    with pytest.raises(UnknownReference):
        parse_signature("gen2 x : [1 | f | 1] => [1 | f | 1]\nobj a\ngen f : a -> a")


def test_invalid_signature_is_rejected_unless_unchecked():
    text = "obj a a\n"
    with pytest.raises(SignatureError):
        parse_signature(text)
    assert len(parse_signature(text, check=False).objects) == 2


def test_script_syntax(sig):
    s = parse_script(
        "src [a | g | 1] ; [1 | f | b]\n"
        "; cells: interchange@0\n"
        "; move:braid-insert@2:0\n"
        "; gen2:alpha@0 r=b back",
        sig,
    )
    assert s.cells == (
        Interchange(0),
        StructMove(Move(MoveKind.BRAID_INSERT, 2, 0)),
        GenCell(sig.gen2("alpha"), 0, (), ("b",), back=True),
    )
    assert parse_script(format_script(s), sig) == s
    assert parse_script("src id(a)", sig) == Script(identity(("a",)))


@pytest.mark.parametrize(
    "text",
    ["src id(a); cells: move:foo-bar@0", "src id(a); cells: move:nat-up@0", "src id(a); cells: move:braid-shift@0:1"],
)
def test_bad_moves_are_syntax_errors(sig, text):
    with pytest.raises(DSLSyntaxError):
        parse_script(text, sig)


def test_generator_cells_need_a_signature():
    with pytest.raises(UnknownReference):
        parse_script("src id(a); cells: gen2:alpha@0")


def test_dispatch_on_the_first_word(sig):
    assert isinstance(parse_dsl("src id(a)", sig), Script)
    assert isinstance(parse_dsl("# comment\n[1 | f | 1]", sig), Diagram)
    assert isinstance(parse_dsl("id(a)", sig), Diagram)
    assert parse_dsl("") == Signature()
    assert parse_dsl("obj a").object_ids == ("a",)


@st.composite
def diagrams(draw, sig: Signature):
    """Random chains of generator and braid slices over the fixture signature."""
    word = tuple(draw(st.lists(st.sampled_from("abc"), max_size=3)))
    d = identity(word)
    for _ in range(draw(st.integers(0, 4))):
        w = d.tgt
        options = [("swap", i) for i in range(len(w) - 1)]
        options += [(g.id, i) for g in sig.gens1 if g.dom for i, x in enumerate(w) if (x,) == g.dom]
        options += [("u", i) for i in range(len(w) + 1)]
        name, i = draw(st.sampled_from(options))
        if name == "swap":
            sl = Slice(w[:i], Braid(w[i], w[i + 1]), w[i + 2:])
        else:
            body = sig.body(name)
            sl = Slice(w[:i], body, w[i + len(body.dom):])
        d = Diagram(d.src, d.slices + (sl,))
    return d


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_printed_diagrams_parse_back(data):
    sig = parse_signature((Path(__file__).parent / "fixtures" / "basic.sig").read_text(encoding="utf-8"))
    d = data.draw(diagrams(sig))
    assert parse_diagram(format_diagram(d), sig) == d


def test_shipped_script_fixture(sig):
    text = (Path(__file__).parent / "fixtures" / "deloop_sigma.script").read_text(encoding="utf-8")
    s = parse_dsl(text, sig)
    u = single((), sig.body("u"))
    assert s == deloop_sigma(u, u)
    assert replay(s) == s.src
    assert parse_script(format_script(s), sig) == s
    assert eval2(deloop_p(), s, Assignment(gens1={"u": "1"})) == "-I.0"
