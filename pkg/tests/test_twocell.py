import pytest

from diagram import Braid, Diagram, Gen, Move, MoveKind, Slice, braid_word, compose, single, tensor
from errors import CellMisapplied, EndpointMismatch, NotUnitEndomorphism
from signature import Gen2
from twocell import (
    GenCell,
    Interchange,
    Script,
    StructMove,
    apply_cell,
    build_beta_fg,
    build_Phi,
    deloop_sigma,
    hcompose,
    replay,
    vcompose,
)

F = Gen("f", ("a",), ("a",))
F2 = Gen("f2", ("a",), ("a",))
G = Gen("g", ("b",), ("b",))
G2 = Gen("g2", ("b",), ("b",))
U = Gen("u", (), ())
V = Gen("v", (), ())

f, f2, g, g2 = (single((), x) for x in (F, F2, G, G2))

# g on the right, below f on the left: the source shape of an interchangor
LEFT_ABOVE = Diagram(("a", "b"), (Slice(("a",), G, ()), Slice((), F, ("b",))))

DOUBLE = Gen2("double", single((), F), compose(single((), F), single((), F)), invertible=True)
STUCK = Gen2("stuck", single((), F), single((), F2))


def test_forward_interchange_puts_the_left_slice_lower():
    out = apply_cell(LEFT_ABOVE, Interchange(0))
    assert out == tensor(f, g)
    assert apply_cell(out, Interchange(0, back=True)) == LEFT_ABOVE


def test_interchange_with_the_wrong_shape_is_rejected():
    with pytest.raises(ValueError):
        apply_cell(tensor(f, g), Interchange(0))
    with pytest.raises(ValueError):
        apply_cell(tensor(f, g), Interchange(1))


def test_interchange_with_a_braid_is_a_move():
    d = Diagram(("a", "b"), (Slice((), F, ("b",)), Slice((), Braid("a", "b"), ())))
    with pytest.raises(ValueError, match="braid-shift"):
        apply_cell(d, Interchange(0))


def test_generator_cell_replaces_a_whiskered_occurrence():
    d = single((), F, ("b",))
    out = apply_cell(d, GenCell(DOUBLE, 0, (), ("b",)))
    assert out.slices == (Slice((), F, ("b",)), Slice((), F, ("b",)))
    assert apply_cell(out, GenCell(DOUBLE, 0, (), ("b",), back=True)) == d


def test_generator_cell_needs_a_literal_match_and_invertibility():
    with pytest.raises(ValueError):
        apply_cell(single((), F, ("b",)), GenCell(DOUBLE, 0))
    with pytest.raises(ValueError):
        apply_cell(single((), F2), GenCell(STUCK, 0, back=True))


def test_script_reports_the_failing_cell():
    s = Script(LEFT_ABOVE, (Interchange(0), Interchange(0)))
    with pytest.raises(CellMisapplied) as info:
        replay(s)
    assert info.value.index == 1


def test_structural_moves_as_cells():
    d = Diagram(("a", "b"), (Slice((), F, ("b",)), Slice((), Braid("a", "b"), ())))
    s = Script(d, (StructMove(Move(MoveKind.NAT_UP, 0, 1)),))
    assert s.tgt.slices == (Slice((), Braid("a", "b"), ()), Slice(("b",), F, ()))


def test_vertical_composition_checks_the_middle():
    s1 = Script(LEFT_ABOVE, (Interchange(0),))
    s2 = Script(tensor(f, g), (Interchange(0, back=True),))
    assert replay(vcompose(s1, s2)) == LEFT_ABOVE
    with pytest.raises(EndpointMismatch):
        vcompose(s1, s1)


def test_both_orders_of_horizontal_composition_agree_on_endpoints():
    alpha = Script(single((), F), (GenCell(DOUBLE, 0),))
    beta = Script(single((), F), (GenCell(DOUBLE, 0),))
    first, second = hcompose(alpha, beta), hcompose(alpha, beta, order="second")
    assert first.src == second.src == compose(single((), F), single((), F))
    assert first.cells == (GenCell(DOUBLE, 0), GenCell(DOUBLE, 2))
    assert second.cells == (GenCell(DOUBLE, 1), GenCell(DOUBLE, 0))
    assert replay(first) == replay(second)
    with pytest.raises(ValueError):
        hcompose(alpha, beta, order="sideways")


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def test_Phi_of_single_layers_is_one_interchange():
    s = build_Phi(f2, g2, f, g)
    assert s.src == compose(tensor(f, g), tensor(f2, g2))
    assert s.cells == (Interchange(1),)
    assert s.tgt == tensor(compose(f, f2), compose(g, g2))


def test_Phi_passes_every_layer():
    ff = compose(f, f2)
    s = build_Phi(f2, g2, ff, g)
    assert len(s.cells) == 1
    s = build_Phi(ff, g2, f, compose(g, g2))
    assert len(s.cells) == 4
    assert s.tgt == tensor(compose(f, ff), compose(compose(g, g2), g2))


def test_Phi_requires_composable_pairs():
    with pytest.raises(EndpointMismatch):
        build_Phi(g, g2, f, g)


def test_beta_of_single_generators():
    s = build_beta_fg(f, g)
    assert s.src == compose(braid_word(("a",), ("b",)), tensor(g, f))
    assert [str(c.move) if isinstance(c, StructMove) else c for c in s.cells] == [
        Interchange(1, back=True),
        "nat-down@1:1",
        "nat-down@2:1",
    ]
    assert s.tgt == compose(tensor(f, g), braid_word(("a",), ("b",)))


def test_beta_with_a_unit_endomorphism():
    u = single((), U)
    s = build_beta_fg(u, g)
    assert s.tgt == compose(tensor(u, g), braid_word((), ("b",)))
    s = build_beta_fg(f, u)
    assert s.tgt == compose(tensor(f, u), braid_word(("a",), ()))


def test_beta_rejects_generators_with_one_empty_end():
    half = single((), Gen("e", (), ("a",)))
    with pytest.raises(EndpointMismatch):
        build_beta_fg(half, g)


def test_deloop_sigma():
    u, v = single((), U), single((), V)
    s = deloop_sigma(u, v)
    assert s.cells == (Interchange(0),)
    assert s.tgt == tensor(v, u)
    with pytest.raises(NotUnitEndomorphism):
        deloop_sigma(f, v)
