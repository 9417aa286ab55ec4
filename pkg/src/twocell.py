# twocell.py – 2-morphisms as replayable scripts of cells

"""
A script starts from a diagram and applies cells one after the other:

* ``StructMove`` – an on-the-nose move; an identity 2-cell.
* ``Interchange`` – the interchangor between slice k and slice k+1. Forward, the
  lower slice sits right of the upper one and the two are swapped so that the
  left one ends up lower; ``back`` is the inverse.
* ``GenCell`` – a whiskered generating 2-cell replacing a literal occurrence of
  its source (or, ``back``, of its target).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Iterator, Union

from diagram import (
    Diagram,
    Move,
    MoveKind,
    apply_move,
    braid_word,
    compose,
    tensor,
    transpose,
    whisker,
)
from errors import CellMisapplied, EndpointMismatch, InvalidMove, NotUnitEndomorphism
from signature import Gen2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructMove:
    move: Move

    @property
    def position(self) -> int:
        return self.move.position


@dataclass(frozen=True)
class Interchange:
    position: int
    back: bool = False


@dataclass(frozen=True)
class GenCell:
    gen: Gen2
    position: int
    left: tuple[str, ...] = ()
    right: tuple[str, ...] = ()
    back: bool = False

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    @property
    def name(self) -> str:
        return self.gen.id


Cell = Union[StructMove, Interchange, GenCell]


def apply_cell(d: Diagram, cell: Cell) -> Diagram:
    """One cell on ``d``; raises ValueError with the reason when it does not fit."""
    if isinstance(cell, StructMove):
        try:
            return apply_move(d, cell.move)
        except InvalidMove as exc:
            raise ValueError(str(exc)) from None

    if isinstance(cell, Interchange):
        k = cell.position
        if not 0 <= k < len(d) - 1:
            raise ValueError(f"no slices at heights {k} and {k + 1}")
        if d.slices[k].is_braid or d.slices[k + 1].is_braid:
            raise ValueError("an interchange with a braid argument is the move braid-shift")
        out = transpose(d, k, upper_left=not cell.back)
        if out is None:
            shape = "upper slice left of the lower one" if not cell.back else "lower slice left of the upper one"
            raise ValueError(f"slices {k}, {k + 1} do not have the shape: {shape}")
        return out

    gen = cell.gen
    if cell.back and not gen.invertible:
        raise ValueError(f"2-generator {gen.id!r} is not invertible")
    pattern = whisker(cell.left, gen.tgt if cell.back else gen.src, cell.right)
    replacement = whisker(cell.left, gen.src if cell.back else gen.tgt, cell.right)
    k, n = cell.position, len(pattern)
    if not 0 <= k <= len(d) or k + n > len(d):
        raise ValueError(f"no room for {n} slices at height {k}")
    if d.heights[k] != pattern.src or d.slices[k:k + n] != pattern.slices:
        raise ValueError(f"no occurrence of {gen.id!r} at height {k}")
    return Diagram(d.src, d.slices[:k] + replacement.slices + d.slices[k + n:])


@dataclass(frozen=True)
class Script:
    src: Diagram
    cells: tuple[Cell, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))

    def steps(self) -> Iterator[tuple[int, Cell, Diagram, Diagram]]:
        """``(index, cell, before, after)`` for every cell, in order."""
        d = self.src
        for i, cell in enumerate(self.cells):
            try:
                after = apply_cell(d, cell)
            except ValueError as exc:
                raise CellMisapplied(i, str(exc)) from None
            yield i, cell, d, after
            d = after

    @property
    def tgt(self) -> Diagram:
        return replay(self)

    def __str__(self) -> str:
        from dsl import format_script

        return format_script(self)


def replay(s: Script) -> Diagram:
    d = s.src
    for _, _, _, after in s.steps():
        d = after
    return d


def vcompose(s1: Script, s2: Script) -> Script:
    if replay(s1) != s2.src:
        raise EndpointMismatch("the first script does not end where the second starts")
    return Script(s1.src, s1.cells + s2.cells)


def shift_cell(cell: Cell, offset: int) -> Cell:
    if isinstance(cell, StructMove):
        return StructMove(replace(cell.move, position=cell.move.position + offset))
    return replace(cell, position=cell.position + offset)


def hcompose(alpha: Script, beta: Script, order: str = "first") -> Script:
    """
    ``alpha : f1 => g1`` below ``beta : f2 => g2`` gives
    ``compose(f1, f2) => compose(g1, g2)``.

    ``order="first"`` runs alpha and then beta on top of g1;
    ``order="second"`` runs beta on top of f1 and then alpha.
    """
    if alpha.src.tgt != beta.src.src:
        raise EndpointMismatch("the scripts act on diagrams that do not stack")
    src = compose(alpha.src, beta.src)
    if order == "first":
        offset = len(replay(alpha))
        cells = alpha.cells + tuple(shift_cell(c, offset) for c in beta.cells)
    elif order == "second":
        offset = len(alpha.src)
        cells = tuple(shift_cell(c, offset) for c in beta.cells) + alpha.cells
    else:
        raise ValueError(f"unknown order {order!r}")
    return Script(src, cells)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


class _Builder:
    def __init__(self, src: Diagram):
        self.src = src
        self.current = src
        self.cells: list[Cell] = []

    def add(self, cell: Cell) -> None:
        try:
            self.current = apply_cell(self.current, cell)
        except ValueError as exc:
            raise CellMisapplied(len(self.cells), str(exc)) from None
        self.cells.append(cell)

    def swap_down(self, k: int, forward: bool) -> None:
        """Move slice k+1 below slice k."""
        d = self.current
        if d.slices[k].is_braid or d.slices[k + 1].is_braid:
            self.add(StructMove(Move(MoveKind.BRAID_SHIFT, k)))
        elif transpose(d, k, upper_left=forward) is not None:
            self.add(Interchange(k, back=not forward))
        else:
            self.add(Interchange(k, back=forward))

    def bubble(self, start: int, lower: int, upper: int, forward: bool) -> None:
        """
        The ``upper`` slices above the block of ``lower`` slices beginning at
        ``start`` move, bottom one first, below that block.
        """
        for i in range(upper):
            for k in range(start + i + lower - 1, start + i - 1, -1):
                self.swap_down(k, forward)

    def move(self, kind: MoveKind, k: int, arg: int | None = None) -> None:
        self.add(StructMove(Move(kind, k, arg)))

    def script(self) -> Script:
        return Script(self.src, tuple(self.cells))


def build_Phi(fp: Diagram, gp: Diagram, f: Diagram, g: Diagram) -> Script:
    """
    From ``(f' ⊗ g') ∘ (f ⊗ g)`` to ``(f'f) ⊗ (g'g)``: every layer of f' passes
    below every layer of g by an interchangor.
    """
    if f.tgt != fp.src or g.tgt != gp.src:
        raise EndpointMismatch("f' must follow f and g' must follow g")
    b = _Builder(compose(tensor(f, g), tensor(fp, gp)))
    b.bubble(len(f), len(g), len(fp), forward=True)
    logger.debug("Phi built with %d cells", len(b.cells))
    return b.script()


def _check_slidable(d: Diagram, name: str) -> None:
    for sl in d.slices:
        if not sl.is_braid and (not sl.body.dom) != (not sl.body.cod):
            raise EndpointMismatch(
                f"{name}: generator {sl.body.name!r} has exactly one empty end and cannot pass a braiding"
            )


def _pass_run(b: _Builder, k: int, run: int, target_left: int) -> int:
    """
    Slice k (sitting right above a braid run of length ``run``) is carried
    below the run and ends with left length ``target_left``. Returns the new
    run length.
    """
    sl = b.current.slices[k]
    if not sl.is_braid and sl.body.is_unit_endo:
        if run and sl.left:
            b.move(MoveKind.UNIT_SLIDE, k, 0)
        for j in range(k - 1, k - run - 1, -1):
            b.move(MoveKind.BRAID_SHIFT, j)
        if len(b.current.slices[k - run].left) != target_left:
            b.move(MoveKind.UNIT_SLIDE, k - run, target_left)
        return run
    if run == 0:
        return 0
    before = len(b.current)
    b.move(MoveKind.NAT_DOWN, k, run)
    return run + len(b.current) - before


def build_beta_fg(f: Diagram, g: Diagram) -> Script:
    """
    From ``(g ⊗ f) ∘ β_{A,B}`` to ``β_{A',B'} ∘ (f ⊗ g)`` for ``f: A -> A'`` and
    ``g: B -> B'``: f first passes below g by inverse interchangors, then each
    layer of f and of g slides down through the braiding.
    """
    _check_slidable(f, "f")
    _check_slidable(g, "g")
    a, bw, a2 = f.src, g.src, f.tgt
    braid = braid_word(a, bw)
    b = _Builder(compose(braid, tensor(g, f)))
    run = len(braid)
    b.bubble(run, len(g), len(f), forward=False)

    for i in range(len(f)):
        k = i + run
        target = len(b.current.slices[k].left) - len(bw)
        run = _pass_run(b, k, run, target)
    for j in range(len(g)):
        k = len(f) + j + run
        target = len(b.current.slices[k].left) + len(a2)
        run = _pass_run(b, k, run, target)
    logger.debug("beta_fg built with %d cells", len(b.cells))
    return b.script()


def deloop_sigma(a: Diagram, bd: Diagram) -> Script:
    """From ``a ⊗ b`` to ``b ⊗ a`` for endomorphisms of the unit, through φ_{b,a}."""
    for name, d in (("A", a), ("B", bd)):
        if d.src or d.tgt:
            raise NotUnitEndomorphism(f"{name} is not an endomorphism of the unit")
    b = _Builder(tensor(a, bd))
    b.bubble(0, len(a), len(bd), forward=True)
    return b.script()
