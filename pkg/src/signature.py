# signature.py – presentations: object generators, 1-generators, 2-generators

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from diagram import Diagram, Gen, Word
from errors import Diagnostic, SignatureError, UnknownReference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ObjGen:
    id: str


@dataclass(frozen=True)
class Gen1:
    id: str
    dom: Word
    cod: Word

    def body(self) -> Gen:
        return Gen(self.id, self.dom, self.cod)


@dataclass(frozen=True)
class Gen2:
    id: str
    src: Diagram
    tgt: Diagram
    invertible: bool = False


@dataclass(frozen=True)
class Signature:
    """
    Declarations in the order they were given. Duplicates are representable so
    that ``validate`` can report them; lookups use the first declaration.
    """

    objects: tuple[ObjGen, ...] = ()
    gens1: tuple[Gen1, ...] = ()
    gens2: tuple[Gen2, ...] = ()
    _index1: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _index2: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "gens1", tuple(self.gens1))
        object.__setattr__(self, "gens2", tuple(self.gens2))
        index1: dict[str, Gen1] = {}
        for g in self.gens1:
            index1.setdefault(g.id, g)
        index2: dict[str, Gen2] = {}
        for g in self.gens2:
            index2.setdefault(g.id, g)
        object.__setattr__(self, "_index1", index1)
        object.__setattr__(self, "_index2", index2)

    @property
    def object_ids(self) -> tuple[str, ...]:
        return tuple(o.id for o in self.objects)

    def gen1(self, name: str) -> Gen1:
        try:
            return self._index1[name]
        except KeyError:
            raise UnknownReference(f"no 1-generator named {name!r}") from None

    def gen2(self, name: str) -> Gen2:
        try:
            return self._index2[name]
        except KeyError:
            raise UnknownReference(f"no 2-generator named {name!r}") from None

    def body(self, name: str) -> Gen:
        return self.gen1(name).body()

    def extend(self, objects=(), gens1=(), gens2=()) -> "Signature":
        return Signature(
            self.objects + tuple(objects),
            self.gens1 + tuple(gens1),
            self.gens2 + tuple(gens2),
        )


def word_concat(u: Word, v: Word) -> Word:
    """Strict tensor of object words; the empty word is the unit."""
    return tuple(u) + tuple(v)


def _check_word(word: Word, declared: set[str], where: str, out: list[Diagnostic]) -> None:
    for letter in word:
        if letter not in declared:
            out.append(Diagnostic("UnknownReference", where, f"object {letter!r} is not declared"))


def _check_diagram(d: Diagram, sig: Signature, declared: set[str], where: str,
                   out: list[Diagnostic]) -> None:
    _check_word(d.src, declared, where, out)
    for k, sl in enumerate(d.slices):
        _check_word(sl.left, declared, where, out)
        _check_word(sl.right, declared, where, out)
        body = sl.body
        if isinstance(body, Gen):
            g = sig._index1.get(body.name)
            if g is None:
                out.append(Diagnostic("UnknownReference", where,
                                      f"slice {k} uses undeclared 1-generator {body.name!r}"))
            elif (g.dom, g.cod) != (body.dom, body.cod):
                out.append(Diagnostic("EndpointMismatch", where,
                                      f"slice {k} uses {body.name!r} with the wrong endpoints"))
        else:
            _check_word(body.dom, declared, where, out)


def validate(sig: Signature) -> list[Diagnostic]:
    """
    All problems with ``sig``, in declaration order. An empty list means the
    signature is well formed.
    """
    out: list[Diagnostic] = []
    seen: set[str] = set()
    for o in sig.objects:
        if o.id in seen:
            out.append(Diagnostic("DuplicateId", f"obj {o.id}", "object declared twice"))
        seen.add(o.id)
    declared = set(seen)

    seen = set()
    for g in sig.gens1:
        where = f"gen {g.id}"
        if g.id in seen:
            out.append(Diagnostic("DuplicateId", where, "1-generator declared twice"))
        seen.add(g.id)
        _check_word(g.dom, declared, where, out)
        _check_word(g.cod, declared, where, out)

    seen = set()
    for g in sig.gens2:
        where = f"gen2 {g.id}"
        if g.id in seen:
            out.append(Diagnostic("DuplicateId", where, "2-generator declared twice"))
        seen.add(g.id)
        _check_diagram(g.src, sig, declared, where, out)
        _check_diagram(g.tgt, sig, declared, where, out)
        if g.src.src != g.tgt.src or g.src.tgt != g.tgt.tgt:
            out.append(Diagnostic("EndpointMismatch", where,
                                  "source and target diagrams have different endpoints"))

    logger.debug("validated signature: %d diagnostics", len(out))
    return out


def ensure_valid(sig: Signature) -> Signature:
    diagnostics = validate(sig)
    if diagnostics:
        raise SignatureError(diagnostics)
    return sig
