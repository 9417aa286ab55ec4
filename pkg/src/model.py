# model.py – finite stringent symmetric monoidal 2-categories and evaluation

"""
A model supplies objects, 1-cells and 2-cells with their compositions, the
strict actions ``L_A`` (``ltensor``) and ``R_A`` (``rtensor``), the interchangor
``phi`` and the braiding ``beta``. Conventions used throughout:

* ``comp1(f, g)`` is ``g ∘ f`` (f first), ``vcomp2(a, b)`` is ``b ∘ a``;
* ``hcomp2(a, b)`` puts ``a`` below ``b`` (``cod(src a) == dom(src b)``);
* for ``f: A -> A'`` and ``g: B -> B'``, ``phi(f, g)`` goes from
  ``comp1(ltensor1(A, g), rtensor1(f, B'))`` to ``tensor1(f, g)``, where the
  nudged tensor is ``tensor1(f, g) = comp1(rtensor1(f, B), ltensor1(A', g))``.

Diagrams and scripts evaluate into a model through an assignment of the
signature's generators.
"""

from __future__ import annotations

import json
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Hashable

from diagram import Diagram, Gen, single
from errors import (
    InconsistentTables,
    MalformedTables,
    ModelError,
    UnassignedGenerator,
)
from signature import Gen1, ObjGen, Signature
from twocell import GenCell, Interchange, Script, StructMove

logger = logging.getLogger(__name__)

Obj = Hashable
Cell1 = Hashable
Cell2 = Hashable


class ModelBase(ABC):
    """Interface shared by table-backed and computed models."""

    name: str = "model"

    # -- objects ----------------------------------------------------------
    @abstractmethod
    def objects(self) -> list[Obj]:
        """The objects the checkers quantify over."""

    @property
    @abstractmethod
    def unit(self) -> Obj: ...

    @abstractmethod
    def tensor(self, a: Obj, b: Obj) -> Obj: ...

    # -- 1-cells ----------------------------------------------------------
    @abstractmethod
    def hom1(self, a: Obj, b: Obj) -> list[Cell1]: ...

    @abstractmethod
    def dom1(self, f: Cell1) -> Obj: ...

    @abstractmethod
    def cod1(self, f: Cell1) -> Obj: ...

    @abstractmethod
    def id1(self, a: Obj) -> Cell1: ...

    @abstractmethod
    def comp1(self, f: Cell1, g: Cell1) -> Cell1: ...

    # -- 2-cells ----------------------------------------------------------
    @abstractmethod
    def hom2(self, f: Cell1, g: Cell1) -> list[Cell2]: ...

    @abstractmethod
    def src2(self, a: Cell2) -> Cell1: ...

    @abstractmethod
    def tgt2(self, a: Cell2) -> Cell1: ...

    @abstractmethod
    def id2(self, f: Cell1) -> Cell2: ...

    @abstractmethod
    def vcomp2(self, a: Cell2, b: Cell2) -> Cell2: ...

    @abstractmethod
    def inv2(self, a: Cell2) -> Cell2 | None: ...

    @abstractmethod
    def hcomp2(self, a: Cell2, b: Cell2) -> Cell2: ...

    # -- monoidal structure -----------------------------------------------
    @abstractmethod
    def ltensor1(self, a: Obj, f: Cell1) -> Cell1: ...

    @abstractmethod
    def rtensor1(self, f: Cell1, a: Obj) -> Cell1: ...

    @abstractmethod
    def ltensor2(self, a: Obj, x: Cell2) -> Cell2: ...

    @abstractmethod
    def rtensor2(self, x: Cell2, a: Obj) -> Cell2: ...

    @abstractmethod
    def phi(self, f: Cell1, g: Cell1) -> Cell2: ...

    @abstractmethod
    def beta(self, a: Obj, b: Obj) -> Cell1: ...

    # -- names --------------------------------------------------------------
    @abstractmethod
    def cells1(self) -> list[Cell1]: ...

    @abstractmethod
    def cells2(self) -> list[Cell2]: ...

    @abstractmethod
    def object(self, name: str) -> Obj: ...

    @abstractmethod
    def cell1(self, name: str) -> Cell1: ...

    @abstractmethod
    def cell2(self, name: str) -> Cell2: ...

    def name0(self, a: Obj) -> str:
        return str(a)

    def name1(self, f: Cell1) -> str:
        return str(f)

    def name2(self, a: Cell2) -> str:
        return str(a)

    def label1(self, f: Cell1) -> str:
        return self.name1(f)

    def label2(self, a: Cell2) -> str:
        return self.name2(a)

    @property
    def assignment(self) -> "Assignment | None":
        return None

    # -- derived ------------------------------------------------------------
    def phi_inv(self, f: Cell1, g: Cell1) -> Cell2:
        inv = self.inv2(self.phi(f, g))
        if inv is None:
            raise ModelError(f"interchangor at ({self.name1(f)}, {self.name1(g)}) has no inverse")
        return inv

    def tensor1(self, f: Cell1, g: Cell1) -> Cell1:
        """Nudged tensor: f on the lower layer."""
        return self.comp1(self.rtensor1(f, self.dom1(g)), self.ltensor1(self.cod1(f), g))

    def whisker2(self, pre: Cell1, x: Cell2, post: Cell1) -> Cell2:
        return self.hcomp2(self.hcomp2(self.id2(pre), x), self.id2(post))

    def tensor_all(self, objs) -> Obj:
        out = self.unit
        for a in objs:
            out = self.tensor(out, a)
        return out

    def is_identity1(self, f: Cell1) -> bool:
        return self.dom1(f) == self.cod1(f) and f == self.id1(self.dom1(f))

    def is_identity2(self, a: Cell2) -> bool:
        return self.src2(a) == self.tgt2(a) and a == self.id2(self.src2(a))

    def composable1(self) -> list[tuple[Cell1, Cell1]]:
        return [(f, g) for f in self.cells1() for g in self.cells1() if self.cod1(f) == self.dom1(g)]

    def composable2(self) -> list[tuple[Cell2, Cell2]]:
        return [(a, b) for a in self.cells2() for b in self.cells2() if self.tgt2(a) == self.src2(b)]

    def stackable2(self) -> list[tuple[Cell2, Cell2]]:
        """Pairs that compose horizontally."""
        return [
            (a, b)
            for a in self.cells2()
            for b in self.cells2()
            if self.cod1(self.src2(a)) == self.dom1(self.src2(b))
        ]

    def to_dict(self) -> dict:
        return materialize(self)


# ---------------------------------------------------------------------------
# Table-backed models
# ---------------------------------------------------------------------------


def _require(data: dict, key: str, where: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise MalformedTables(f"missing {where}{key!r}")
    return data[key]


class TableModel(ModelBase):
    """A finite model given by explicit tables; every cell is a string id."""

    def __init__(self, data: dict, name: str | None = None):
        self.data = data
        self.name = name or data.get("name", "model")
        objs = _require(data, "objects", "")
        self._carrier = [str(a) for a in _require(objs, "carrier", "objects.")]
        self._unit = str(_require(objs, "unit", "objects."))
        self._tensor = _require(objs, "tensor", "objects.")
        self._cells1 = _require(data, "cells1", "")
        self._cells2 = _require(data, "cells2", "")
        self._compose1 = _require(data, "compose1", "")
        compose2 = _require(data, "compose2", "")
        self._vertical = _require(compose2, "vertical", "compose2.")
        self._horizontal = _require(compose2, "horizontal", "compose2.")
        lt = _require(data, "ltensor", "")
        rt = _require(data, "rtensor", "")
        self._lt1 = _require(lt, "cells1", "ltensor.")
        self._lt2 = _require(lt, "cells2", "ltensor.")
        self._rt1 = _require(rt, "cells1", "rtensor.")
        self._rt2 = _require(rt, "cells2", "rtensor.")
        self._phi = _require(data, "phi", "")
        self._beta = _require(data, "beta", "")
        self._id1 = {c["dom"]: f for f, c in self._cells1.items() if c.get("identity")}
        self._id2 = {c["src"]: a for a, c in self._cells2.items() if c.get("identity")}
        self._assignment = None
        if data.get("assignment"):
            a = data["assignment"]
            self._assignment = Assignment(
                dict(a.get("objects", {})), dict(a.get("gens1", {})), dict(a.get("gens2", {}))
            )
        self._validate()
        logger.debug(
            "loaded table model %s: %d objects, %d 1-cells, %d 2-cells",
            self.name, len(self._carrier), len(self._cells1), len(self._cells2),
        )

    # lookups ---------------------------------------------------------------
    @staticmethod
    def _lookup(table: dict, key1, key2, what: str):
        try:
            return table[key1][key2]
        except (KeyError, TypeError):
            raise MalformedTables(f"{what} has no entry for ({key1}, {key2})") from None

    def objects(self):
        return list(self._carrier)

    @property
    def unit(self):
        return self._unit

    def tensor(self, a, b):
        return self._lookup(self._tensor, a, b, "objects.tensor")

    def hom1(self, a, b):
        return [f for f, c in self._cells1.items() if c["dom"] == a and c["cod"] == b]

    def dom1(self, f):
        return self._cells1[f]["dom"]

    def cod1(self, f):
        return self._cells1[f]["cod"]

    def id1(self, a):
        try:
            return self._id1[a]
        except KeyError:
            raise MalformedTables(f"object {a} has no identity 1-cell") from None

    def comp1(self, f, g):
        return self._lookup(self._compose1, f, g, "compose1")

    def hom2(self, f, g):
        return [a for a, c in self._cells2.items() if c["src"] == f and c["tgt"] == g]

    def src2(self, a):
        return self._cells2[a]["src"]

    def tgt2(self, a):
        return self._cells2[a]["tgt"]

    def id2(self, f):
        try:
            return self._id2[f]
        except KeyError:
            raise MalformedTables(f"1-cell {f} has no identity 2-cell") from None

    def vcomp2(self, a, b):
        return self._lookup(self._vertical, a, b, "compose2.vertical")

    def inv2(self, a):
        return self._cells2[a].get("inverse")

    def hcomp2(self, a, b):
        return self._lookup(self._horizontal, a, b, "compose2.horizontal")

    def ltensor1(self, a, f):
        return self._lookup(self._lt1, a, f, "ltensor.cells1")

    def rtensor1(self, f, a):
        return self._lookup(self._rt1, a, f, "rtensor.cells1")

    def ltensor2(self, a, x):
        return self._lookup(self._lt2, a, x, "ltensor.cells2")

    def rtensor2(self, x, a):
        return self._lookup(self._rt2, a, x, "rtensor.cells2")

    def phi(self, f, g):
        return self._lookup(self._phi, f, g, "phi")

    def beta(self, a, b):
        return self._lookup(self._beta, a, b, "beta")

    def cells1(self):
        return list(self._cells1)

    def cells2(self):
        return list(self._cells2)

    def object(self, name):
        if name not in self._carrier:
            raise ModelError(f"{self.name} has no object {name!r}")
        return name

    def cell1(self, name):
        if name not in self._cells1:
            raise ModelError(f"{self.name} has no 1-cell {name!r}")
        return name

    def cell2(self, name):
        if name not in self._cells2:
            raise ModelError(f"{self.name} has no 2-cell {name!r}")
        return name

    def label1(self, f):
        return self._cells1[f].get("label", f)

    def label2(self, a):
        return self._cells2[a].get("label", a)

    @property
    def assignment(self):
        return self._assignment

    # validation --------------------------------------------------------------
    def _validate(self) -> None:
        """Totality and closure of every table, then endpoints."""
        objs, c1, c2 = self._carrier, self._cells1, self._cells2
        if self._unit not in objs:
            raise MalformedTables(f"unit {self._unit!r} is not an object")
        for f, c in c1.items():
            for key in ("dom", "cod"):
                if c.get(key) not in objs:
                    raise MalformedTables(f"1-cell {f}: {key} is not an object")
        for a, c in c2.items():
            for key in ("src", "tgt"):
                if c.get(key) not in c1:
                    raise MalformedTables(f"2-cell {a}: {key} is not a 1-cell")
            inv = c.get("inverse")
            if inv is not None and inv not in c2:
                raise MalformedTables(f"2-cell {a}: inverse {inv!r} is not a 2-cell")

        def closed(value, carrier, what):
            if value not in carrier:
                raise MalformedTables(f"{what} gives {value!r}, which is not in the carrier")

        for a in objs:
            self.id1(a)
            for b in objs:
                closed(self.tensor(a, b), objs, "objects.tensor")
                closed(self.beta(a, b), c1, "beta")
                ab = self.tensor(a, b)
                if (self.dom1(self.beta(a, b)), self.cod1(self.beta(a, b))) != (ab, self.tensor(b, a)):
                    raise InconsistentTables(f"beta({a}, {b}) has the wrong endpoints")
        for f in c1:
            self.id2(f)
            for a in objs:
                closed(self.ltensor1(a, f), c1, "ltensor.cells1")
                closed(self.rtensor1(f, a), c1, "rtensor.cells1")
            for g in c1:
                closed(self.phi(f, g), c2, "phi")
                if self.inv2(self.phi(f, g)) is None:
                    raise MalformedTables(f"phi({f}, {g}) has no recorded inverse")
                if self.src2(self.phi(f, g)) != self.comp1(
                    self.ltensor1(self.dom1(f), g), self.rtensor1(f, self.cod1(g))
                ) or self.tgt2(self.phi(f, g)) != self.tensor1(f, g):
                    raise InconsistentTables(f"phi({f}, {g}) has the wrong endpoints")
        for f, g in self.composable1():
            h = self.comp1(f, g)
            closed(h, c1, "compose1")
            if (self.dom1(h), self.cod1(h)) != (self.dom1(f), self.cod1(g)):
                raise InconsistentTables(f"compose1({f}, {g}) has the wrong endpoints")
        for x in c2:
            for a in objs:
                closed(self.ltensor2(a, x), c2, "ltensor.cells2")
                closed(self.rtensor2(x, a), c2, "rtensor.cells2")
        for x, y in self.composable2():
            z = self.vcomp2(x, y)
            closed(z, c2, "compose2.vertical")
            if (self.src2(z), self.tgt2(z)) != (self.src2(x), self.tgt2(y)):
                raise InconsistentTables(f"vertical({x}, {y}) has the wrong endpoints")
        for x, y in self.stackable2():
            z = self.hcomp2(x, y)
            closed(z, c2, "compose2.horizontal")
            want = (self.comp1(self.src2(x), self.src2(y)), self.comp1(self.tgt2(x), self.tgt2(y)))
            if (self.src2(z), self.tgt2(z)) != want:
                raise InconsistentTables(f"horizontal({x}, {y}) has the wrong endpoints")


def materialize(m: ModelBase) -> dict:
    """Tables of a finite model, keyed by names, in a stable order."""
    n0, n1, n2 = m.name0, m.name1, m.name2
    objs, c1, c2 = m.objects(), m.cells1(), m.cells2()
    data: dict = {
        "name": m.name,
        "objects": {
            "carrier": [n0(a) for a in objs],
            "unit": n0(m.unit),
            "tensor": {n0(a): {n0(b): n0(m.tensor(a, b)) for b in objs} for a in objs},
        },
        "cells1": {
            n1(f): {
                "dom": n0(m.dom1(f)),
                "cod": n0(m.cod1(f)),
                "label": m.label1(f),
                "identity": m.is_identity1(f),
            }
            for f in c1
        },
        "cells2": {},
        "compose1": {},
        "compose2": {"vertical": {}, "horizontal": {}},
        "ltensor": {
            "cells1": {n0(a): {n1(f): n1(m.ltensor1(a, f)) for f in c1} for a in objs},
            "cells2": {n0(a): {n2(x): n2(m.ltensor2(a, x)) for x in c2} for a in objs},
        },
        "rtensor": {
            "cells1": {n0(a): {n1(f): n1(m.rtensor1(f, a)) for f in c1} for a in objs},
            "cells2": {n0(a): {n2(x): n2(m.rtensor2(x, a)) for x in c2} for a in objs},
        },
        "phi": {n1(f): {n1(g): n2(m.phi(f, g)) for g in c1} for f in c1},
        "beta": {n0(a): {n0(b): n1(m.beta(a, b)) for b in objs} for a in objs},
    }
    for x in c2:
        inv = m.inv2(x)
        data["cells2"][n2(x)] = {
            "src": n1(m.src2(x)),
            "tgt": n1(m.tgt2(x)),
            "label": m.label2(x),
            "identity": m.is_identity2(x),
            "inverse": None if inv is None else n2(inv),
        }
    for f, g in m.composable1():
        data["compose1"].setdefault(n1(f), {})[n1(g)] = n1(m.comp1(f, g))
    for x, y in m.composable2():
        data["compose2"]["vertical"].setdefault(n2(x), {})[n2(y)] = n2(m.vcomp2(x, y))
    for x, y in m.stackable2():
        data["compose2"]["horizontal"].setdefault(n2(x), {})[n2(y)] = n2(m.hcomp2(x, y))
    if m.assignment is not None:
        data["assignment"] = m.assignment.to_dict()
    return data


def dumps_model(m: ModelBase) -> str:
    return json.dumps(m.to_dict(), indent=2, sort_keys=True) + "\n"


def model_from_dict(data: dict, name: str | None = None) -> TableModel:
    if not isinstance(data, dict):
        raise MalformedTables("a model file must hold a JSON object")
    return TableModel(data, name=name)


def read_model_file(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedTables(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


# ---------------------------------------------------------------------------
# Assignments and evaluation
# ---------------------------------------------------------------------------


@dataclass
class Assignment:
    """Generator names mapped to names of model cells."""

    objects: dict[str, str] = field(default_factory=dict)
    gens1: dict[str, str] = field(default_factory=dict)
    gens2: dict[str, str] = field(default_factory=dict)

    def object(self, m: ModelBase, letter: str) -> Obj:
        try:
            return m.object(self.objects[letter])
        except KeyError:
            raise UnassignedGenerator(f"object {letter!r} is not assigned") from None

    def cell1(self, m: ModelBase, name: str) -> Cell1:
        try:
            return m.cell1(self.gens1[name])
        except KeyError:
            raise UnassignedGenerator(f"1-generator {name!r} is not assigned") from None

    def cell2(self, m: ModelBase, name: str) -> Cell2:
        try:
            return m.cell2(self.gens2[name])
        except KeyError:
            raise UnassignedGenerator(f"2-generator {name!r} is not assigned") from None

    def to_dict(self) -> dict:
        return {"objects": dict(self.objects), "gens1": dict(self.gens1), "gens2": dict(self.gens2)}

    @classmethod
    def from_dict(cls, data: dict) -> "Assignment":
        return cls(
            {str(k): str(v) for k, v in data.get("objects", {}).items()},
            {str(k): str(v) for k, v in data.get("gens1", {}).items()},
            {str(k): str(v) for k, v in data.get("gens2", {}).items()},
        )


class Tautological(Assignment):
    """Every name is read directly as the name of a model cell."""

    def object(self, m, letter):
        return m.object(letter)

    def cell1(self, m, name):
        return m.cell1(name)

    def cell2(self, m, name):
        return m.cell2(name)


class Evaluator:
    """Evaluates diagrams and scripts of a signature in a model."""

    def __init__(self, m: ModelBase, assignment: Assignment | None = None):
        self.m = m
        self.assignment = assignment or m.assignment or Assignment()

    def word(self, word) -> Obj:
        return self.m.tensor_all(self.assignment.object(self.m, x) for x in word)

    def body(self, body) -> Cell1:
        m = self.m
        if isinstance(body, Gen):
            cell = self.assignment.cell1(m, body.name)
            if (m.dom1(cell), m.cod1(cell)) != (self.word(body.dom), self.word(body.cod)):
                raise ModelError(f"{body.name!r} is assigned a 1-cell with the wrong endpoints")
            return cell
        return m.beta(self.word((body.x,)), self.word((body.y,)))

    def eval1(self, d: Diagram) -> Cell1:
        m = self.m
        out = m.id1(self.word(d.src))
        for sl in d.slices:
            layer = m.ltensor1(self.word(sl.left), m.rtensor1(self.body(sl.body), self.word(sl.right)))
            out = m.comp1(out, layer)
        return out

    def _below(self, d: Diagram, k: int) -> Cell1:
        return self.eval1(Diagram(d.src, d.slices[:k]))

    def _above(self, d: Diagram, k: int) -> Cell1:
        return self.eval1(Diagram(d.heights[k], d.slices[k:]))

    def cell(self, cell, before: Diagram, after: Diagram) -> Cell2:
        m = self.m
        if isinstance(cell, StructMove):
            lhs, rhs = self.eval1(before), self.eval1(after)
            if lhs != rhs:
                raise ModelError(
                    f"{cell.move} relates 1-cells {m.name1(lhs)} and {m.name1(rhs)} in {m.name}"
                )
            return m.id2(lhs)

        if isinstance(cell, Interchange):
            k = cell.position
            lower, upper = before.slices[k], before.slices[k + 1]
            w = lower.cod
            if not cell.back:
                left, right = upper, lower
                x = upper.left
                y = w[len(x) + len(upper.body.dom):len(lower.left)]
                z = lower.right
            else:
                left, right = lower, upper
                x = lower.left
                y = w[len(x) + len(lower.body.cod):len(upper.left)]
                z = upper.right
            f = self.body(left.body)
            g = m.ltensor1(self.word(y), self.body(right.body))
            core = m.phi_inv(f, g) if cell.back else m.phi(f, g)
            local = m.ltensor2(self.word(x), m.rtensor2(core, self.word(z)))
            return m.whisker2(self._below(before, k), local, self._above(before, k + 2))

        # GenCell
        alpha = self.assignment.cell2(m, cell.gen.id)
        if cell.back:
            inv = m.inv2(alpha)
            if inv is None:
                raise ModelError(f"{cell.gen.id!r} is assigned a 2-cell with no inverse")
            alpha = inv
        n = len(cell.gen.tgt if cell.back else cell.gen.src)
        local = m.ltensor2(self.word(cell.left), m.rtensor2(alpha, self.word(cell.right)))
        return m.whisker2(
            self._below(before, cell.position), local, self._above(before, cell.position + n)
        )

    def eval2(self, s: Script) -> Cell2:
        m = self.m
        out = m.id2(self.eval1(s.src))
        for _, cell, before, after in s.steps():
            out = m.vcomp2(out, self.cell(cell, before, after))
        return out


def eval1(m: ModelBase, d: Diagram, assignment: Assignment | None = None) -> Cell1:
    return Evaluator(m, assignment).eval1(d)


def eval2(m: ModelBase, s: Script, assignment: Assignment | None = None) -> Cell2:
    return Evaluator(m, assignment).eval2(s)


# ---------------------------------------------------------------------------
# The model's own cells as generators
# ---------------------------------------------------------------------------


class Presentation:
    """
    Diagrams standing for the model's own cells: an object is a one-letter
    word (the unit is the empty word) and a non-identity 1-cell a one-slice
    diagram.
    """

    def __init__(self, m: ModelBase):
        self.m = m
        self.evaluator = Evaluator(m, Tautological())

    def word(self, a: Obj) -> tuple[str, ...]:
        return () if a == self.m.unit else (self.m.name0(a),)

    def diagram(self, f: Cell1) -> Diagram:
        m = self.m
        if m.is_identity1(f):
            return Diagram(self.word(m.dom1(f)))
        return single((), Gen(m.name1(f), self.word(m.dom1(f)), self.word(m.cod1(f))))

    def signature(self) -> Signature:
        m = self.m
        objs = [ObjGen(m.name0(a)) for a in m.objects() if a != m.unit]
        gens = [
            Gen1(m.name1(f), self.word(m.dom1(f)), self.word(m.cod1(f)))
            for f in m.cells1()
            if not m.is_identity1(f)
        ]
        return Signature(tuple(objs), tuple(gens))

    def eval1(self, d: Diagram) -> Cell1:
        return self.evaluator.eval1(d)

    def eval2(self, s: Script) -> Cell2:
        return self.evaluator.eval2(s)


def tautological(m: ModelBase) -> Presentation:
    return Presentation(m)


def default_assignment(m: ModelBase, sig: Signature) -> Assignment:
    """
    Objects go to a default object; each 1-generator to the first non-identity
    1-cell with the right endpoints (or the identity); each 2-generator likewise.
    """
    default = getattr(m, "default_object", None)
    if default is None:
        others = [a for a in m.objects() if a != m.unit]
        default = others[0] if others else m.unit
    a = Assignment(objects={o.id: m.name0(default) for o in sig.objects})
    ev = Evaluator(m, a)
    for g in sig.gens1:
        dom, cod = ev.word(g.dom), ev.word(g.cod)
        cells = m.hom1(dom, cod)
        picks = [f for f in cells if not m.is_identity1(f)] or cells
        if not picks:
            raise UnassignedGenerator(f"no 1-cell in {m.name} fits {g.id!r}")
        a.gens1[g.id] = m.name1(picks[0])
    for g in sig.gens2:
        src, tgt = ev.eval1(g.src), ev.eval1(g.tgt)
        cells = m.hom2(src, tgt)
        picks = [x for x in cells if not m.is_identity2(x)] or cells
        if not picks:
            raise UnassignedGenerator(f"no 2-cell in {m.name} fits {g.id!r}")
        a.gens2[g.id] = m.name2(picks[0])
    return a
