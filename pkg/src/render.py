# render.py – ascii and TikZ drawings of diagrams and scripts

from __future__ import annotations

import logging

from config import ASCII_COLUMN, TIKZ_BOX_COLOR, TIKZ_XSCALE, TIKZ_YSCALE
from diagram import Diagram, MoveKind, Slice, Word
from dsl import format_cell
from twocell import GenCell, Interchange, Script, StructMove

logger = logging.getLogger(__name__)

TARGETS = ("ascii", "tikz")


# ---------------------------------------------------------------------------
# ascii: one column per wire, top of the diagram printed first
# ---------------------------------------------------------------------------


def _labels(word: Word) -> str:
    if not word:
        return "1"
    return "".join(x.ljust(ASCII_COLUMN) for x in word).rstrip()


def _wires(n: int) -> str:
    return ("|" + " " * (ASCII_COLUMN - 1)) * n


def _slice_row(sl: Slice) -> str:
    width = max(len(sl.body.dom), len(sl.body.cod), 1) * ASCII_COLUMN
    if sl.is_braid:
        body = " " * (ASCII_COLUMN // 2) + "X"
    else:
        body = f"[{sl.body.name}]"
    return _wires(len(sl.left)) + body.ljust(width) + _wires(len(sl.right))


def _ascii_rows(d: Diagram, marked: range | None = None) -> list[str]:
    """Rows top first; with ``marked``, a gutter flags the slices in it."""

    def row(text: str, k: int = -1) -> str:
        if marked is None:
            return text.rstrip()
        return (("* " if k in marked else "  ") + text).rstrip()

    out = [row(_labels(d.tgt)), row(_wires(len(d.tgt)))]
    for k in reversed(range(len(d))):
        out.append(row(_slice_row(d.slices[k]), k))
        out.append(row(_wires(len(d.heights[k]))))
    out.append(row(_labels(d.src)))
    return out


def render_ascii(d: Diagram) -> str:
    return "\n".join(_ascii_rows(d)) + "\n"


# ---------------------------------------------------------------------------
# cell sites: the slices a cell acts on
# ---------------------------------------------------------------------------


def cell_site(cell, before: Diagram) -> tuple[int, int]:
    """Half-open slice range ``[lo, hi)``; empty when the cell acts at a single height."""
    k = cell.position
    if isinstance(cell, Interchange):
        return k, k + 2
    if isinstance(cell, StructMove):
        move = cell.move
        if move.kind in (MoveKind.BRAID_CANCEL, MoveKind.BRAID_SHIFT):
            return k, k + 2
        if move.kind is MoveKind.NAT_UP:
            return k, k + move.arg + 1
        if move.kind is MoveKind.NAT_DOWN:
            return k - move.arg, k + 1
        if move.kind is MoveKind.UNIT_SLIDE:
            return k, k + 1
        return k, k
    assert isinstance(cell, GenCell)
    pattern = cell.gen.tgt if cell.back else cell.gen.src
    return k, k + len(pattern)


def render_script_ascii(s: Script) -> str:
    blocks = []
    last = s.src
    for _, cell, before, after in s.steps():
        lo, hi = cell_site(cell, before)
        blocks.append("\n".join(_ascii_rows(before, range(lo, hi))))
        blocks.append(f"== {format_cell(cell)} ==")
        last = after
    blocks.append("\n".join(_ascii_rows(last, None if not s.cells else range(0))))
    return "\n".join(blocks) + "\n"


# ---------------------------------------------------------------------------
# TikZ: slice k occupies the band 2k <= y <= 2k+2, wire j sits at x = j
# ---------------------------------------------------------------------------


def _n(v: float) -> str:
    return f"{v:g}"


def _tikz_slice(k: int, sl: Slice) -> list[str]:
    y0, y1 = 2 * k, 2 * k + 2
    lines = []
    for i in range(len(sl.left)):
        lines.append(rf"\draw ({i}, {y0}) -- ({i}, {y1});")
    at = len(sl.left)
    n_dom, n_cod = len(sl.body.dom), len(sl.body.cod)
    for i in range(len(sl.right)):
        lines.append(rf"\draw ({at + n_dom + i}, {y0}) -- ({at + n_cod + i}, {y1});")
    if sl.is_braid:
        lines.append(rf"\draw ({at}, {y0}) -- ({at + 1}, {y1});")
        lines.append(rf"\draw ({at + 1}, {y0}) -- ({at}, {y1});")
        return lines
    span = max(n_dom, n_cod, 1) - 1
    lines.append(
        rf"\draw ({_n(at - 0.3)}, {_n(y0 + 0.6)}) rectangle ({_n(at + span + 0.3)}, {_n(y0 + 1.4)});"
    )
    lines.append(rf"\node at ({_n(at + span / 2)}, {y0 + 1}) {{${sl.body.name}$}};")
    for i in range(n_dom):
        lines.append(rf"\draw ({at + i}, {y0}) -- ({at + i}, {_n(y0 + 0.6)});")
    for i in range(n_cod):
        lines.append(rf"\draw ({at + i}, {_n(y0 + 1.4)}) -- ({at + i}, {y1});")
    return lines


def _tikz_body(d: Diagram) -> list[str]:
    lines = []
    for j, x in enumerate(d.src):
        lines.append(rf"\node[below] at ({j}, 0) {{${x}$}};")
    if not d.slices:
        for j in range(len(d.src)):
            lines.append(rf"\draw ({j}, 0) -- ({j}, 2);")
    for k, sl in enumerate(d.slices):
        lines.extend(_tikz_slice(k, sl))
    top = 2 * max(len(d), 1)
    for j, x in enumerate(d.tgt):
        lines.append(rf"\node[above] at ({j}, {top}) {{${x}$}};")
    return lines


def _picture(body: list[str]) -> str:
    head = rf"\begin{{tikzpicture}}[xscale={_n(TIKZ_XSCALE)}, yscale={_n(TIKZ_YSCALE)}]"
    return "\n".join([head] + ["  " + line for line in body] + [r"\end{tikzpicture}"]) + "\n"


def render_tikz(d: Diagram) -> str:
    return _picture(_tikz_body(d))


def _site_box(before: Diagram, lo: int, hi: int) -> str:
    if hi > lo:
        y0, y1 = 2 * lo + 0.1, 2 * hi - 0.1
        width = max(len(w) for w in before.heights[lo:hi + 1])
    else:
        y0, y1 = 2 * lo - 0.3, 2 * lo + 0.3
        width = len(before.heights[lo]) + 2
    return (
        rf"\draw[{TIKZ_BOX_COLOR}, thick] ({_n(-0.5)}, {_n(y0)}) rectangle "
        rf"({_n(max(width, 1) - 0.5)}, {_n(y1)});"
    )


def render_script_tikz(s: Script) -> str:
    pictures = []
    last = s.src
    for i, cell, before, after in s.steps():
        lo, hi = cell_site(cell, before)
        body = _tikz_body(before) + [_site_box(before, lo, hi)]
        pictures.append(f"% step {i}: {format_cell(cell)}\n" + _picture(body))
        last = after
    pictures.append("% target\n" + render_tikz(last))
    return "\n".join(pictures)


def render(obj: Diagram | Script, target: str = "ascii") -> str:
    if target not in TARGETS:
        raise ValueError(f"unknown render target {target!r}; expected one of {', '.join(TARGETS)}")
    logger.debug("rendering %s as %s", type(obj).__name__, target)
    if isinstance(obj, Script):
        return render_script_ascii(obj) if target == "ascii" else render_script_tikz(obj)
    return render_ascii(obj) if target == "ascii" else render_tikz(obj)
