# diagram.py – 1-morphisms as stacks of whiskered slices, and their equality

"""
A diagram is read bottom to top. Each slice is ``left · body · right`` where the
body is a generator or an elementary braid of two adjacent letters. Tensor of
1-morphisms is nudged: ``f ⊗ g`` puts f in the lower slice and g in the upper.

Two diagrams are equal when one can be turned into the other by the moves
enumerated in ``moves``: each is an on-the-nose equation of a stringent
symmetric monoidal 2-category (inverse braids cancel, a braid passes a disjoint
slice, a slice slides through a braid run that carries its block intact, and a
unit-to-unit generator moves freely across wires).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Iterator, Union

import braids
from config import DEFAULT_MAX_STATES, DEFAULT_SLACK
from errors import EndpointMismatch, InvalidMove, SearchBudgetExceeded

logger = logging.getLogger(__name__)

Word = tuple[str, ...]


@dataclass(frozen=True)
class Gen:
    name: str
    dom: Word
    cod: Word

    def __post_init__(self):
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))

    @property
    def is_unit_endo(self) -> bool:
        return not self.dom and not self.cod


@dataclass(frozen=True)
class Braid:
    x: str
    y: str

    @property
    def dom(self) -> Word:
        return (self.x, self.y)

    @property
    def cod(self) -> Word:
        return (self.y, self.x)


Body = Union[Gen, Braid]


@dataclass(frozen=True)
class Slice:
    left: Word
    body: Body
    right: Word

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    @property
    def dom(self) -> Word:
        return self.left + self.body.dom + self.right

    @property
    def cod(self) -> Word:
        return self.left + self.body.cod + self.right

    @property
    def is_braid(self) -> bool:
        return isinstance(self.body, Braid)

    def whiskered(self, left: Word, right: Word) -> "Slice":
        return Slice(tuple(left) + self.left, self.body, self.right + tuple(right))


@dataclass(frozen=True)
class Diagram:
    src: Word
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "src", tuple(self.src))
        object.__setattr__(self, "slices", tuple(self.slices))
        heights = [self.src]
        for k, sl in enumerate(self.slices):
            if sl.dom != heights[-1]:
                raise EndpointMismatch(
                    f"slice {k} expects {' * '.join(sl.dom) or '1'} "
                    f"but receives {' * '.join(heights[-1]) or '1'}"
                )
            heights.append(sl.cod)
        object.__setattr__(self, "_heights", tuple(heights))

    @property
    def tgt(self) -> Word:
        return self._heights[-1]

    @property
    def heights(self) -> tuple[Word, ...]:
        """The word between slices: ``heights[k]`` is the domain of slice k."""
        return self._heights

    def __len__(self) -> int:
        return len(self.slices)

    def __str__(self) -> str:
        from dsl import format_diagram

        return format_diagram(self)


def identity(word: Word) -> Diagram:
    return Diagram(tuple(word), ())


def single(left: Word, body: Body, right: Word = ()) -> Diagram:
    sl = Slice(left, body, right)
    return Diagram(sl.dom, (sl,))


def compose(d1: Diagram, d2: Diagram) -> Diagram:
    """``d1`` below, ``d2`` on top."""
    if d1.tgt != d2.src:
        raise EndpointMismatch(
            f"cannot stack: {' * '.join(d1.tgt) or '1'} vs {' * '.join(d2.src) or '1'}"
        )
    return Diagram(d1.src, d1.slices + d2.slices)


def whisker(left: Word, d: Diagram, right: Word) -> Diagram:
    left, right = tuple(left), tuple(right)
    return Diagram(left + d.src + right, tuple(sl.whiskered(left, right) for sl in d.slices))


def tensor(d1: Diagram, d2: Diagram) -> Diagram:
    return compose(whisker((), d1, d2.src), whisker(d1.tgt, d2, ()))


def run_slices(word: Word, indices) -> tuple[tuple[Slice, ...], Word]:
    """Slices of the braid run ``indices`` starting from ``word``, and the word on top."""
    w = tuple(word)
    out = []
    for i in indices:
        x, y = w[i], w[i + 1]
        out.append(Slice(w[:i], Braid(x, y), w[i + 2:]))
        w = w[:i] + (y, x) + w[i + 2:]
    return tuple(out), w


def braid_word(a: Word, b: Word) -> Diagram:
    """
    The block braiding ``a·b -> b·a`` as elementary braids. Each letter of ``b``
    in turn crosses all of ``a``.
    """
    a, b = tuple(a), tuple(b)
    slices, _ = run_slices(a + b, braids.reduced_word(braids.block_swap(len(a), len(b))))
    return Diagram(a + b, slices)


def permutation(d: Diagram) -> braids.Perm:
    """Wire permutation of a braid-only diagram."""
    if not all(sl.is_braid for sl in d.slices):
        raise ValueError("permutation is only defined for braid-only diagrams")
    return braids.run_permutation([len(sl.left) for sl in d.slices], len(d.src))


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


class MoveKind(str, enum.Enum):
    BRAID_CANCEL = "braid-cancel"
    BRAID_INSERT = "braid-insert"
    BRAID_SHIFT = "braid-shift"
    NAT_UP = "nat-up"
    NAT_DOWN = "nat-down"
    UNIT_SLIDE = "unit-slide"

    @property
    def takes_arg(self) -> bool:
        return self not in (MoveKind.BRAID_CANCEL, MoveKind.BRAID_SHIFT)


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    position: int
    arg: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", MoveKind(self.kind))
        if self.kind.takes_arg and self.arg is None:
            raise InvalidMove(f"{self.kind.value} needs an argument")
        if not self.kind.takes_arg and self.arg is not None:
            raise InvalidMove(f"{self.kind.value} takes no argument")

    def __str__(self) -> str:
        text = f"{self.kind.value}@{self.position}"
        if self.arg is not None:
            text += f":{self.arg}"
        return text


def _cancel(d: Diagram, k: int) -> Diagram | None:
    if not 0 <= k < len(d) - 1:
        return None
    s, t = d.slices[k], d.slices[k + 1]
    if not (s.is_braid and t.is_braid) or len(s.left) != len(t.left):
        return None
    if t.body != Braid(s.body.y, s.body.x):
        return None
    return Diagram(d.src, d.slices[:k] + d.slices[k + 2:])


def _insert(d: Diagram, k: int, i: int) -> Diagram | None:
    if not 0 <= k <= len(d):
        return None
    w = d.heights[k]
    if not 0 <= i < len(w) - 1:
        return None
    pair, _ = run_slices(w, (i, i))
    return Diagram(d.src, d.slices[:k] + pair + d.slices[k:])


def transpose(d: Diagram, k: int, upper_left: bool) -> Diagram | None:
    """
    Swap the heights of slices k and k+1 when their supports are disjoint.

    ``upper_left`` selects the shape: the upper slice lies left of the lower
    one (the source shape of the interchangor), or the lower slice lies left
    of the upper one (its target shape). Returns None if the shape does not
    occur.
    """
    if not 0 <= k < len(d) - 1:
        return None
    s, t = d.slices[k], d.slices[k + 1]
    w = s.cod
    a, ad = len(t.left), len(t.body.dom)
    b, bc = len(s.left), len(s.body.cod)
    if upper_left:
        if a + ad > b:
            return None
        x, y, z = t.left, w[a + ad:b], s.right
        lower = Slice(x, t.body, y + s.body.dom + z)
        upper = Slice(x + t.body.cod + y, s.body, z)
    else:
        if b + bc > a:
            return None
        x, y, z = s.left, w[b + bc:a], t.right
        lower = Slice(x + s.body.dom + y, t.body, z)
        upper = Slice(x, s.body, y + t.body.cod + z)
    return Diagram(d.src, d.slices[:k] + (lower, upper) + d.slices[k + 2:])


def _shift(d: Diagram, k: int) -> Diagram | None:
    if not 0 <= k < len(d) - 1:
        return None
    if not (d.slices[k].is_braid or d.slices[k + 1].is_braid):
        return None
    out = transpose(d, k, True)
    return out if out is not None else transpose(d, k, False)


def _canonical_run(run: tuple[Slice, ...], width: int) -> braids.Perm | None:
    if not all(sl.is_braid for sl in run):
        return None
    indices = tuple(len(sl.left) for sl in run)
    perm = braids.run_permutation(indices, width)
    if braids.reduced_word(perm) != indices:
        return None
    return perm


def _nat_up(d: Diagram, k: int, r: int) -> Diagram | None:
    if r < 1 or not 0 <= k or k + r >= len(d):
        return None
    s = d.slices[k]
    l, c, dd = len(s.left), len(s.body.cod), len(s.body.dom)
    if c == 0 or dd == 0:
        return None
    perm = _canonical_run(d.slices[k + 1:k + r + 1], len(d.heights[k + 1]))
    if perm is None:
        return None
    p = braids.block_image(perm, l, c)
    if p is None or p == l:
        return None
    new_run, top = run_slices(d.heights[k], braids.reduced_word(braids.transport(perm, l, c, dd, p)))
    moved = Slice(top[:p], s.body, top[p + dd:])
    return Diagram(d.src, d.slices[:k] + new_run + (moved,) + d.slices[k + r + 1:])


def _nat_down(d: Diagram, k: int, r: int) -> Diagram | None:
    if r < 1 or k - r < 0 or k >= len(d):
        return None
    s = d.slices[k]
    l, c, dd = len(s.left), len(s.body.cod), len(s.body.dom)
    if c == 0 or dd == 0:
        return None
    w0 = d.heights[k - r]
    perm = _canonical_run(d.slices[k - r:k], len(w0))
    if perm is None:
        return None
    p = braids.block_preimage(perm, l, dd)
    if p is None or p == l:
        return None
    moved = Slice(w0[:p], s.body, w0[p + dd:])
    new_run, _ = run_slices(moved.cod, braids.reduced_word(braids.transport(perm, p, dd, c, l)))
    return Diagram(d.src, d.slices[:k - r] + (moved,) + new_run + d.slices[k + 1:])


def _unit_slide(d: Diagram, k: int, p: int) -> Diagram | None:
    if not 0 <= k < len(d):
        return None
    s = d.slices[k]
    if s.is_braid or not s.body.is_unit_endo:
        return None
    w = d.heights[k]
    if not 0 <= p <= len(w) or p == len(s.left):
        return None
    return Diagram(d.src, d.slices[:k] + (Slice(w[:p], s.body, w[p:]),) + d.slices[k + 1:])


def _try(d: Diagram, move: Move) -> Diagram | None:
    k, arg = move.position, move.arg
    if move.kind is MoveKind.BRAID_CANCEL:
        return _cancel(d, k)
    if move.kind is MoveKind.BRAID_INSERT:
        return _insert(d, k, arg)
    if move.kind is MoveKind.BRAID_SHIFT:
        return _shift(d, k)
    if move.kind is MoveKind.NAT_UP:
        return _nat_up(d, k, arg)
    if move.kind is MoveKind.NAT_DOWN:
        return _nat_down(d, k, arg)
    return _unit_slide(d, k, arg)


def apply_move(d: Diagram, move: Move) -> Diagram:
    result = _try(d, move)
    if result is None:
        raise InvalidMove(f"{move} does not apply")
    return result


def moves(d: Diagram, cap: int | None = None) -> Iterator[tuple[Diagram, Move]]:
    """
    Every diagram one move away from ``d``. With ``cap``, braid insertions that
    would make the diagram longer than ``cap`` slices are skipped.
    """
    n = len(d)
    for k in range(n - 1):
        for kind, fn in ((MoveKind.BRAID_CANCEL, _cancel), (MoveKind.BRAID_SHIFT, _shift)):
            out = fn(d, k)
            if out is not None:
                yield out, Move(kind, k)
    if cap is None or n + 2 <= cap:
        for k in range(n + 1):
            for i in range(len(d.heights[k]) - 1):
                yield _insert(d, k, i), Move(MoveKind.BRAID_INSERT, k, i)
    for k, s in enumerate(d.slices):
        if not s.is_braid and s.body.is_unit_endo:
            for p in range(len(d.heights[k]) + 1):
                out = _unit_slide(d, k, p)
                if out is not None:
                    yield out, Move(MoveKind.UNIT_SLIDE, k, p)
            continue
        r = 1
        while k + r < n and d.slices[k + r].is_braid:
            out = _nat_up(d, k, r)
            if out is not None:
                yield out, Move(MoveKind.NAT_UP, k, r)
            r += 1
        r = 1
        while k - r >= 0 and d.slices[k - r].is_braid:
            out = _nat_down(d, k, r)
            if out is not None:
                yield out, Move(MoveKind.NAT_DOWN, k, r)
            r += 1


def inverse_move(before: Diagram, move: Move, after: Diagram) -> Move:
    """The move that takes ``after`` back to ``before``."""
    k = move.position
    grown = len(after) - len(before)
    if move.kind is MoveKind.BRAID_CANCEL:
        return Move(MoveKind.BRAID_INSERT, k, len(before.slices[k].left))
    if move.kind is MoveKind.BRAID_INSERT:
        return Move(MoveKind.BRAID_CANCEL, k)
    if move.kind is MoveKind.BRAID_SHIFT:
        return move
    if move.kind is MoveKind.NAT_UP:
        r = move.arg + grown
        return Move(MoveKind.NAT_DOWN, k + r, r)
    if move.kind is MoveKind.NAT_DOWN:
        r = move.arg + grown
        return Move(MoveKind.NAT_UP, k - move.arg, r)
    return Move(MoveKind.UNIT_SLIDE, k, len(before.slices[k].left))


@dataclass(frozen=True)
class MoveTrace:
    moves: tuple[Move, ...] = ()

    def replay(self, d: Diagram) -> Diagram:
        for mv in self.moves:
            d = apply_move(d, mv)
        return d

    def then(self, other: "MoveTrace") -> "MoveTrace":
        return MoveTrace(self.moves + other.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __str__(self) -> str:
        return "\n".join(str(m) for m in self.moves)


# ---------------------------------------------------------------------------
# Equality
# ---------------------------------------------------------------------------


def wiring(d: Diagram) -> tuple:
    """
    What every move preserves: the generators bottom to top, where each of
    their inputs comes from, and where each target wire comes from.
    Sources are ``("in", i)`` for the i-th source wire and ``("out", n, j)``
    for output j of the n-th generator.
    """
    ports: list[tuple] = [("in", i) for i in range(len(d.src))]
    gens = []
    for sl in d.slices:
        l = len(sl.left)
        if sl.is_braid:
            ports[l], ports[l + 1] = ports[l + 1], ports[l]
            continue
        body = sl.body
        n = len(gens)
        gens.append((body.name, body.dom, body.cod, tuple(ports[l:l + len(body.dom)])))
        ports[l:l + len(body.dom)] = [("out", n, j) for j in range(len(body.cod))]
    return d.src, tuple(gens), tuple(ports)


class Verdict(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


def _widening(slack: int) -> list[int]:
    return sorted({0, min(2, slack), slack})


def _search(d1: Diagram, d2: Diagram, cap: int, max_states: int) -> MoveTrace | None:
    seen = ({d1: None}, {d2: None})
    frontiers = ([d1], [d2])
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = seen[side], seen[1 - side]
        nxt_frontier = []
        for node in frontiers[side]:
            for nxt, mv in moves(node, cap=cap):
                if len(nxt) > cap or nxt in mine:
                    continue
                mine[nxt] = (node, mv)
                if nxt in other:
                    return _join(seen, nxt)
                nxt_frontier.append(nxt)
            if len(seen[0]) + len(seen[1]) > max_states:
                raise SearchBudgetExceeded(len(seen[0]) + len(seen[1]), max_states)
        frontiers = (nxt_frontier, frontiers[1]) if side == 0 else (frontiers[0], nxt_frontier)
    logger.debug("exhausted component at cap %d after %d diagrams", cap, len(seen[0]) + len(seen[1]))
    return None


def _join(seen, meet: Diagram) -> MoveTrace:
    forward: list[Move] = []
    node = meet
    while seen[0][node] is not None:
        parent, mv = seen[0][node]
        forward.append(mv)
        node = parent
    forward.reverse()
    node = meet
    while seen[1][node] is not None:
        parent, mv = seen[1][node]
        forward.append(inverse_move(parent, mv, node))
        node = parent
    return MoveTrace(tuple(forward))


def find_trace(
    d1: Diagram,
    d2: Diagram,
    *,
    slack: int = DEFAULT_SLACK,
    max_states: int = DEFAULT_MAX_STATES,
) -> MoveTrace | None:
    """
    A sequence of moves from ``d1`` to ``d2``, or None if there is none within
    ``max(len(d1), len(d2)) + slack`` slices. Raises SearchBudgetExceeded when
    more than ``max_states`` diagrams would be visited.
    """
    if d1 == d2:
        return MoveTrace()
    if d1.src != d2.src or d1.tgt != d2.tgt or wiring(d1) != wiring(d2):
        return None
    base = max(len(d1), len(d2))
    for extra in _widening(slack):
        trace = _search(d1, d2, base + extra, max_states)
        if trace is not None:
            logger.debug("equal at slack %d with %d moves", extra, len(trace))
            return trace
    return None


def equal(d1: Diagram, d2: Diagram, **kwargs) -> bool:
    return find_trace(d1, d2, **kwargs) is not None


def decide_equal(d1: Diagram, d2: Diagram, **kwargs) -> tuple[Verdict, MoveTrace | None]:
    try:
        trace = find_trace(d1, d2, **kwargs)
    except SearchBudgetExceeded as exc:
        logger.info("equality undecided: %s", exc)
        return Verdict.UNKNOWN, None
    return (Verdict.TRUE, trace) if trace is not None else (Verdict.FALSE, None)


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


def _cancel_all(d: Diagram) -> Diagram:
    stack: list[Slice] = []
    for sl in d.slices:
        if stack:
            top = stack[-1]
            if (top.is_braid and sl.is_braid and len(top.left) == len(sl.left)
                    and sl.body == Braid(top.body.y, top.body.x)):
                stack.pop()
                continue
        stack.append(sl)
    return Diagram(d.src, tuple(stack))


def _braid_runs(d: Diagram) -> list[tuple[int, int]]:
    runs, k = [], 0
    while k < len(d):
        if d.slices[k].is_braid:
            start = k
            while k < len(d) and d.slices[k].is_braid:
                k += 1
            runs.append((start, k))
        else:
            k += 1
    return runs


def _canonical_runs(d: Diagram) -> Diagram:
    out: list[Slice] = []
    k = 0
    for start, end in _braid_runs(d):
        out.extend(d.slices[k:start])
        word = d.heights[start]
        perm = braids.run_permutation([len(sl.left) for sl in d.slices[start:end]], len(word))
        run, _ = run_slices(word, braids.reduced_word(perm))
        out.extend(run)
        k = end
    out.extend(d.slices[k:])
    return Diagram(d.src, tuple(out))


def _sink_once(d: Diagram) -> Diagram:
    runs = dict(_braid_runs(d))
    for k in range(len(d) - 1, -1, -1):
        if d.slices[k].is_braid or k + 1 not in runs:
            continue
        out = _nat_up(d, k, runs[k + 1] - (k + 1))
        if out is not None:
            return out
    return d


def canonical_braids(d: Diagram) -> Diagram:
    """
    Cancel inverse braid pairs, push braids below generators where a slide
    applies, and write every maximal braid run as the least reduced word of its
    permutation. Equal to ``d`` and idempotent.
    """
    current = d
    while True:
        nxt = _sink_once(_canonical_runs(_cancel_all(current)))
        if nxt == current:
            return current
        current = nxt
