# dsl.py – text syntax for signatures, diagrams and scripts, and its printers

"""
Grammar (whitespace and ``#`` comments are ignored)::

    word     := "1" | IDENT ("*" IDENT)*
    slice    := "[" word "|" (IDENT | "swap" "(" IDENT "," IDENT ")") "|" word "]"
    diagram  := "id" "(" word ")" | slice (";" slice)*
    cell     := "interchange" "@" INT ["back"]
              | "move" ":" KIND "@" INT [":" INT]
              | "gen2" ":" IDENT "@" INT ["l" "=" word] ["r" "=" word] ["back"]
    script   := "src" diagram [";" "cells" ":" cell (";" cell)*]
    sigline  := "obj" IDENT+ | "gen" IDENT ":" word "->" word
              | "gen2" IDENT ":" diagram "=>" diagram ["invertible"]

A signature is one declaration per line. The printers are inverse to the
parsers: ``parse_x(format_x(v)) == v``.
"""

from __future__ import annotations

import logging
import re

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from diagram import Braid, Diagram, Move, MoveKind, Slice, Word, identity
from errors import DSLSyntaxError, InvalidMove, UnknownReference
from signature import Gen1, Gen2, ObjGen, Signature, ensure_valid
from twocell import Cell, GenCell, Interchange, Script, StructMove

logger = logging.getLogger(__name__)

KEYWORDS = frozenset(
    {"id", "swap", "obj", "gen", "gen2", "src", "cells", "interchange", "move", "back", "invertible"}
)

_GRAMMAR = r"""
sigline: "obj" ident+                                      -> obj_line
       | "gen" ident ":" word "->" word                    -> gen_line
       | "gen2" ident ":" diagram "=>" diagram INVERTIBLE? -> gen2_line

script: "src" diagram (";" "cells" ":" cell (";" cell)*)?

diagram: "id" "(" word ")"    -> id_diagram
       | slice (";" slice)*   -> slices

slice: "[" word "|" body "|" word "]"

body: ident                            -> gen_body
    | "swap" "(" ident "," ident ")"   -> swap_body

word: "1"                   -> unit_word
    | ident ("*" ident)*    -> letters

cell: "interchange" "@" INT BACK?                          -> interchange
    | "move" ":" KIND "@" INT (":" INT)?                   -> move
    | "gen2" ":" ident "@" INT left_pad? right_pad? BACK?  -> gen_cell

left_pad: "l" "=" word
right_pad: "r" "=" word

ident: IDENT

BACK: "back"
INVERTIBLE: "invertible"
IDENT: /[A-Za-z_][A-Za-z0-9_']*/
KIND: /[a-z]+(-[a-z]+)+/
INT: /[0-9]+/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = Lark(_GRAMMAR, start=["sigline", "diagram", "script"], parser="earley")


class _Build(Transformer):
    """Turns parse trees into values, resolving names against ``sig``."""

    def __init__(self, sig: Signature | None):
        super().__init__()
        self.sig = sig

    def _gen_body(self, name: str):
        if self.sig is None:
            raise UnknownReference(f"no 1-generator named {name!r} (no signature given)")
        return self.sig.body(name)

    def _letters_known(self, word: Word) -> Word:
        if self.sig is not None:
            known = set(self.sig.object_ids)
            for x in word:
                if x not in known:
                    raise UnknownReference(f"no object generator named {x!r}")
        return word

    def ident(self, items):
        (tok,) = items
        if str(tok) in KEYWORDS:
            raise DSLSyntaxError(tok.line, tok.column, "an identifier", str(tok))
        return str(tok)

    def unit_word(self, _):
        return ()

    def letters(self, items):
        return self._letters_known(tuple(items))

    def gen_body(self, items):
        return self._gen_body(items[0])

    def swap_body(self, items):
        x, y = items
        self._letters_known((x, y))
        return Braid(x, y)

    def slice(self, items):
        left, body, right = items
        return Slice(left, body, right)

    def id_diagram(self, items):
        return identity(items[0])

    def slices(self, items):
        return Diagram(items[0].dom, items)

    def interchange(self, items):
        return Interchange(int(items[0]), back=len(items) > 1)

    def move(self, items):
        kind_tok = items[0]
        try:
            kind = MoveKind(str(kind_tok))
        except ValueError:
            raise DSLSyntaxError(
                kind_tok.line, kind_tok.column, "a move kind (" + ", ".join(k.value for k in MoveKind) + ")",
                str(kind_tok),
            ) from None
        arg = int(items[2]) if len(items) > 2 else None
        try:
            return StructMove(Move(kind, int(items[1]), arg))
        except InvalidMove as exc:
            raise DSLSyntaxError(kind_tok.line, kind_tok.column, str(exc), str(kind_tok)) from None

    def left_pad(self, items):
        return ("l", items[0])

    def right_pad(self, items):
        return ("r", items[0])

    def gen_cell(self, items):
        name, position = items[0], int(items[1])
        if self.sig is None:
            raise UnknownReference(f"no 2-generator named {name!r} (no signature given)")
        pads = dict(x for x in items[2:] if isinstance(x, tuple))
        back = any(isinstance(x, Token) and x.type == "BACK" for x in items[2:])
        return GenCell(self.sig.gen2(name), position, pads.get("l", ()), pads.get("r", ()), back)

    def script(self, items):
        return Script(items[0], tuple(items[1:]))

    def obj_line(self, items):
        return [ObjGen(x) for x in items]

    def gen_line(self, items):
        name, dom, cod = items
        return Gen1(name, dom, cod)

    def gen2_line(self, items):
        name, src, tgt = items[:3]
        return Gen2(name, src, tgt, invertible=len(items) > 3)


def _describe(names) -> str:
    out = set()
    for name in names:
        try:
            pattern = _parser.get_terminal(name).pattern
        except KeyError:
            out.add(name)
            continue
        out.add(repr(pattern.value) if pattern.type == "str" else name.lower())
    return " or ".join(sorted(out)) or "end of input"


def _syntax_error(exc: UnexpectedInput, text: str, line_offset: int) -> DSLSyntaxError:
    names = getattr(exc, "allowed", None) or getattr(exc, "expected", None) or ()
    if isinstance(exc, UnexpectedEOF) or getattr(exc, "line", -1) < 1:
        lines = text.split("\n")
        line, column, got = len(lines), len(lines[-1]) + 1, ""
    else:
        line, column = exc.line, exc.column
        got = str(getattr(exc, "token", "") or getattr(exc, "char", ""))
    return DSLSyntaxError(line + line_offset, column, _describe(names), got)


def _parse(text: str, start: str, sig: Signature | None, line_offset: int = 0):
    try:
        tree = _parser.parse(text, start=start)
    except UnexpectedInput as exc:
        raise _syntax_error(exc, text, line_offset) from None
    try:
        return _Build(sig).transform(tree)
    except VisitError as exc:
        err = exc.orig_exc
        if isinstance(err, DSLSyntaxError) and line_offset:
            err = DSLSyntaxError(err.line + line_offset, err.column, err.expected, err.got)
        raise err from None


def parse_diagram(text: str, sig: Signature | None = None) -> Diagram:
    return _parse(text, "diagram", sig)


def parse_script(text: str, sig: Signature | None = None) -> Script:
    return _parse(text, "script", sig)


def parse_signature(text: str, check: bool = True) -> Signature:
    """One declaration per line; 2-generators may only use earlier declarations."""
    sig = Signature()
    for lineno, raw in enumerate(text.split("\n")):
        if not raw.split("#", 1)[0].strip():
            continue
        decl = _parse(raw, "sigline", sig, line_offset=lineno)
        if isinstance(decl, list):
            sig = sig.extend(objects=decl)
        elif isinstance(decl, Gen1):
            sig = sig.extend(gens1=[decl])
        else:
            sig = sig.extend(gens2=[decl])
    logger.debug(
        "parsed signature: %d objects, %d 1-generators, %d 2-generators",
        len(sig.objects), len(sig.gens1), len(sig.gens2),
    )
    return ensure_valid(sig) if check else sig


_FIRST_WORD = re.compile(r"\A(?:\s|#[^\n]*)*([A-Za-z_0-9\[]+)")


def parse_dsl(text: str, sig: Signature | None = None):
    """A signature, a diagram or a script, told apart by the first word."""
    match = _FIRST_WORD.match(text)
    head = match.group(1) if match else ""
    if head == "src":
        return parse_script(text, sig)
    if head in ("obj", "gen", "gen2") or not head:
        return parse_signature(text)
    return parse_diagram(text, sig)


# ---------------------------------------------------------------------------
# Printers
# ---------------------------------------------------------------------------


def format_word(word: Word) -> str:
    return " * ".join(word) or "1"


def format_slice(sl: Slice) -> str:
    body = f"swap({sl.body.x}, {sl.body.y})" if sl.is_braid else sl.body.name
    return f"[{format_word(sl.left)} | {body} | {format_word(sl.right)}]"


def format_diagram(d: Diagram) -> str:
    if not d.slices:
        return f"id({format_word(d.src)})"
    return " ; ".join(format_slice(sl) for sl in d.slices)


def format_cell(cell: Cell) -> str:
    if isinstance(cell, StructMove):
        return f"move:{cell.move}"
    if isinstance(cell, Interchange):
        return f"interchange@{cell.position}" + (" back" if cell.back else "")
    text = f"gen2:{cell.name}@{cell.position}"
    if cell.left:
        text += f" l={format_word(cell.left)}"
    if cell.right:
        text += f" r={format_word(cell.right)}"
    return text + (" back" if cell.back else "")


def format_script(s: Script) -> str:
    text = f"src {format_diagram(s.src)}"
    if s.cells:
        text += "\n; cells: " + "\n; ".join(format_cell(c) for c in s.cells)
    return text


def format_signature(sig: Signature) -> str:
    lines = []
    if sig.objects:
        lines.append("obj " + " ".join(o.id for o in sig.objects))
    for g in sig.gens1:
        lines.append(f"gen {g.id} : {format_word(g.dom)} -> {format_word(g.cod)}")
    for g in sig.gens2:
        line = f"gen2 {g.id} : {format_diagram(g.src)} => {format_diagram(g.tgt)}"
        lines.append(line + (" invertible" if g.invertible else ""))
    return "\n".join(lines) + "\n"
