import pytest

from diagram import Gen, identity, single
from dsl import parse_diagram, parse_script
from render import cell_site, render, render_ascii, render_tikz
from twocell import Interchange


def test_identity_wires(golden):
    assert render_ascii(identity(("a", "b"))) == golden("identity_ab.txt")
    assert render_ascii(identity(())) == "1\n\n1\n"


def test_tensor_has_the_first_factor_lower(sig, golden):
    d = parse_diagram("[1 | f | b] ; [a | g | 1]", sig)
    assert render(d) == golden("tensor_fg.txt")


def test_braid_crossing(sig, golden):
    d = parse_diagram("[1 | swap(a, b) | 1]", sig)
    assert render_ascii(d) == golden("swap_ab.txt")
    assert render(d, "tikz") == golden("swap_ab.tex")


def test_generator_box_in_tikz(golden):
    assert render_tikz(single((), Gen("f", ("a",), ("a",)))) == golden("single_f.tex")


def test_script_marks_the_acted_on_slices(sig, golden):
    s = parse_script("src [a | g | 1] ; [1 | f | b]; cells: interchange@0", sig)
    assert render(s) == golden("interchange.txt")


def test_script_in_tikz(sig):
    s = parse_script("src [a | g | 1] ; [1 | f | b]; cells: interchange@0", sig)
    text = render(s, "tikz")
    assert text.startswith("% step 0: interchange@0\n")
    assert r"\draw[green, thick] (-0.5, 0.1) rectangle (1.5, 3.9);" in text
    assert "% target\n" in text
    assert text.count(r"\begin{tikzpicture}") == 2


def test_cell_sites(sig):
    d = parse_diagram("[1 | f | b] ; [a | g | 1]", sig)
    assert cell_site(Interchange(1), d) == (1, 3)
    s = parse_script("src id(a * b); cells: move:braid-insert@0:0 ; move:nat-down@2:1", sig)
    assert [cell_site(c, d) for c in s.cells] == [(0, 0), (1, 3)]


def test_unknown_target():
    with pytest.raises(ValueError, match="unknown render target"):
        render(identity(("a",)), "svg")
