# catalog.py – shipped example models and the delooping construction

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from config import (
    BUILTIN_MODELS,
    DEFAULT_BRAIDING,
    DEFAULT_VARIANT,
    DEFAULT_WINDOW,
    SPHERE_BRAIDINGS,
    SPHERE_VARIANTS,
)
from errors import MalformedTables, ModelError, NotOneObject
from model import ModelBase, TableModel, model_from_dict, read_model_file
from report import Report, Tally

logger = logging.getLogger(__name__)

# Koszul rule: the symmetry on degrees (i, j) is -1 exactly when both are odd.
KOSZUL = np.array([[1, 1], [1, -1]], dtype=int)

SIGN_LABEL = {1: "I", -1: "-I"}


# ---------------------------------------------------------------------------
# Symmetric monoidal categories as tables
# ---------------------------------------------------------------------------


@dataclass
class SymmetricMonoidalTables:
    """A finite strict symmetric monoidal category; ``compose[f][g]`` is g after f."""

    objects: list[str]
    unit: str
    tensor: dict[str, dict[str, str]]
    morphisms: dict[str, dict]
    identity: dict[str, str]
    compose: dict[str, dict[str, str]]
    tensor_mor: dict[str, dict[str, str]]
    braiding: dict[str, dict[str, str]]
    inverse: dict[str, str | None]
    name: str = field(default="smc", compare=False)

    def dom(self, f: str) -> str:
        return self.morphisms[f]["dom"]

    def cod(self, f: str) -> str:
        return self.morphisms[f]["cod"]

    def comp(self, f: str, g: str) -> str:
        return self.compose[f][g]

    def tens(self, f: str, g: str) -> str:
        return self.tensor_mor[f][g]


def picard_p() -> SymmetricMonoidalTables:
    """
    Skeletal Picard category: objects 0 and 1 under addition mod 2, each with
    automorphisms I and -I; the symmetry on (1, 1) is -I.
    """
    objects = ["0", "1"]
    sign_of = {"I": 1, "-I": -1}

    def mor(sign: int, obj: int) -> str:
        return f"{SIGN_LABEL[sign]}.{obj}"

    morphisms = {}
    for i in range(2):
        for label in ("I", "-I"):
            morphisms[f"{label}.{i}"] = {"dom": str(i), "cod": str(i), "label": label}

    def parts(f: str) -> tuple[int, int]:
        label, obj = f.rsplit(".", 1)
        return sign_of[label], int(obj)

    compose: dict = {}
    tensor_mor: dict = {}
    for f in morphisms:
        sf, i = parts(f)
        for g in morphisms:
            sg, j = parts(g)
            if i == j:
                compose.setdefault(f, {})[g] = mor(sf * sg, i)
            tensor_mor.setdefault(f, {})[g] = mor(sf * sg, (i + j) % 2)

    return SymmetricMonoidalTables(
        objects=objects,
        unit="0",
        tensor={a: {b: str((int(a) + int(b)) % 2) for b in objects} for a in objects},
        morphisms=morphisms,
        identity={a: f"I.{a}" for a in objects},
        compose=compose,
        tensor_mor=tensor_mor,
        braiding={
            a: {b: mor(int(KOSZUL[int(a), int(b)]), (int(a) + int(b)) % 2) for b in objects}
            for a in objects
        },
        inverse={f: f for f in morphisms},
        name="P",
    )


def _check_smc_tables(s: SymmetricMonoidalTables) -> None:
    try:
        for a in s.objects:
            s.identity[a]
            for b in s.objects:
                if s.tensor[a][b] not in s.objects:
                    raise MalformedTables(f"tensor({a}, {b}) is not an object")
                if s.braiding[a][b] not in s.morphisms:
                    raise MalformedTables(f"braiding({a}, {b}) is not a morphism")
        for f in s.morphisms:
            s.inverse[f]
            for g in s.morphisms:
                s.tensor_mor[f][g]
                if s.cod(f) == s.dom(g):
                    s.compose[f][g]
    except KeyError as exc:
        raise MalformedTables(f"symmetric monoidal tables have no entry for {exc}") from None


def check_smc(s: SymmetricMonoidalTables) -> Report:
    """Every symmetric monoidal category axiom over all objects and morphisms."""
    _check_smc_tables(s)
    report = Report(f"symmetric monoidal category axioms: {s.name}")
    objs, mors = s.objects, list(s.morphisms)

    t = Tally("smc.monoid", "tensor of objects is associative and unital")
    for a in objs:
        t.check({"A": a, "law": "unit"}, (s.tensor[s.unit][a], s.tensor[a][s.unit]), (a, a))
        for b in objs:
            for c in objs:
                t.check({"A": a, "B": b, "C": c}, s.tensor[s.tensor[a][b]][c], s.tensor[a][s.tensor[b][c]])
    report.add(t.done())

    t = Tally("smc.category", "composition is associative and unital")
    for f in mors:
        t.check({"f": f, "law": "unit"}, (s.comp(s.identity[s.dom(f)], f), s.comp(f, s.identity[s.cod(f)])),
                (f, f))
        for g in mors:
            if s.cod(f) != s.dom(g):
                continue
            for h in mors:
                if s.cod(g) == s.dom(h):
                    t.check({"f": f, "g": g, "h": h}, s.comp(s.comp(f, g), h), s.comp(f, s.comp(g, h)))
    report.add(t.done())

    t = Tally("smc.functor", "tensor is a functor")
    for a in objs:
        for b in objs:
            t.check({"A": a, "B": b}, s.tens(s.identity[a], s.identity[b]), s.identity[s.tensor[a][b]])
    for f in mors:
        for f2 in mors:
            if s.cod(f) != s.dom(f2):
                continue
            for g in mors:
                for g2 in mors:
                    if s.cod(g) == s.dom(g2):
                        t.check({"f": f, "f'": f2, "g": g, "g'": g2},
                                s.tens(s.comp(f, f2), s.comp(g, g2)),
                                s.comp(s.tens(f, g), s.tens(f2, g2)))
    report.add(t.done())

    t = Tally("smc.naturality", "the symmetry is natural")
    for f in mors:
        for g in mors:
            lhs = s.comp(s.tens(f, g), s.braiding[s.cod(f)][s.cod(g)])
            rhs = s.comp(s.braiding[s.dom(f)][s.dom(g)], s.tens(g, f))
            t.check({"f": f, "g": g}, lhs, rhs)
    report.add(t.done())

    t = Tally("smc.symmetry", "the symmetry is its own inverse")
    for a in objs:
        for b in objs:
            t.check({"A": a, "B": b}, s.comp(s.braiding[a][b], s.braiding[b][a]),
                    s.identity[s.tensor[a][b]])
    report.add(t.done())

    t = Tally("smc.hexagon", "symmetry with a tensor is the composite of symmetries")
    for a in objs:
        for b in objs:
            for c in objs:
                lhs = s.braiding[a][s.tensor[b][c]]
                rhs = s.comp(s.tens(s.braiding[a][b], s.identity[c]), s.tens(s.identity[b], s.braiding[a][c]))
                t.check({"A": a, "B": b, "C": c}, lhs, rhs)
    report.add(t.done())
    return report


def deloop(s: SymmetricMonoidalTables, name: str | None = None) -> TableModel:
    """
    The one-object model whose 1-cells are the objects of ``s`` (composed by the
    tensor) and whose 2-cells are its morphisms; ``phi(X, Y)`` is the symmetry
    from Y*X to X*Y.
    """
    _check_smc_tables(s)
    star = "*"
    objs, mors = s.objects, list(s.morphisms)
    data = {
        "name": name or f"deloop({s.name})",
        "objects": {"carrier": [star], "unit": star, "tensor": {star: {star: star}}},
        "cells1": {
            a: {"dom": star, "cod": star, "label": a, "identity": a == s.unit} for a in objs
        },
        "cells2": {
            f: {
                "src": s.dom(f),
                "tgt": s.cod(f),
                "label": s.morphisms[f].get("label", f),
                "identity": s.identity[s.dom(f)] == f,
                "inverse": s.inverse.get(f),
            }
            for f in mors
        },
        "compose1": {a: {b: s.tensor[a][b] for b in objs} for a in objs},
        "compose2": {
            "vertical": {f: dict(s.compose.get(f, {})) for f in mors if s.compose.get(f)},
            "horizontal": {f: dict(s.tensor_mor[f]) for f in mors},
        },
        "ltensor": {"cells1": {star: {a: a for a in objs}}, "cells2": {star: {f: f for f in mors}}},
        "rtensor": {"cells1": {star: {a: a for a in objs}}, "cells2": {star: {f: f for f in mors}}},
        "phi": {x: {y: s.braiding[y][x] for y in objs} for x in objs},
        "beta": {star: {star: s.unit}},
    }
    return TableModel(data)


def loop(m: ModelBase) -> SymmetricMonoidalTables:
    """Inverse of ``deloop``: the symmetry on (A, B) is ``phi(B, A)``."""
    objs = m.objects()
    if len(objs) != 1:
        raise NotOneObject(f"{m.name} has {len(objs)} objects")
    n1, n2 = m.name1, m.name2
    cells1, cells2 = m.cells1(), m.cells2()
    compose: dict = {}
    for x, y in m.composable2():
        compose.setdefault(n2(x), {})[n2(y)] = n2(m.vcomp2(x, y))
    return SymmetricMonoidalTables(
        objects=[n1(f) for f in cells1],
        unit=n1(m.id1(objs[0])),
        tensor={n1(f): {n1(g): n1(m.comp1(f, g)) for g in cells1} for f in cells1},
        morphisms={
            n2(x): {"dom": n1(m.src2(x)), "cod": n1(m.tgt2(x)), "label": m.label2(x)} for x in cells2
        },
        identity={n1(f): n2(m.id2(f)) for f in cells1},
        compose=compose,
        tensor_mor={n2(x): {n2(y): n2(m.hcomp2(x, y)) for y in cells2} for x in cells2},
        braiding={n1(a): {n1(b): n2(m.phi(b, a)) for b in cells1} for a in cells1},
        inverse={n2(x): (None if m.inv2(x) is None else n2(m.inv2(x))) for x in cells2},
        name=m.name,
    )


# ---------------------------------------------------------------------------
# The sphere example
# ---------------------------------------------------------------------------

_CELL1 = re.compile(r"^\((-?\d+),([01])\)$")
_CELL2 = re.compile(r"^\((-?\d+),([01]),(-?I)\)$")


class SphereQ(ModelBase):
    """
    Objects are integers; only endomorphisms exist, and every hom-category is
    P: 1-cells ``(m, i)`` of degree i, 2-cells ``(m, i, s)`` with sign s.
    Composition adds degrees, the interchangor is the Koszul sign of the two
    degrees, and the braiding of (m, n) has degree m+n (``sum``) or mn
    (``product``) mod 2. In the ``braid-trivial`` variant the interchangor is
    the identity whenever an argument is a braiding 1-cell.

    Only objects in ``[-window, window]`` are enumerated; every operation
    works on any integer.
    """

    default_object = 1

    def __init__(self, window: int = DEFAULT_WINDOW, variant: str = DEFAULT_VARIANT,
                 braiding: str = DEFAULT_BRAIDING):
        if window < 1:
            raise ModelError("window must be at least 1")
        if variant not in SPHERE_VARIANTS:
            raise ModelError(f"unknown variant {variant!r}; expected one of {', '.join(SPHERE_VARIANTS)}")
        if braiding not in SPHERE_BRAIDINGS:
            raise ModelError(f"unknown braiding {braiding!r}; expected one of {', '.join(SPHERE_BRAIDINGS)}")
        self.window = window
        self.variant = variant
        self.braiding = braiding
        self.name = f"Q[{variant}, {braiding}]"

    def objects(self):
        return list(range(-self.window, self.window + 1))

    @property
    def unit(self):
        return 0

    def tensor(self, a, b):
        return a + b

    def hom1(self, a, b):
        return [(a, 0), (a, 1)] if a == b else []

    def dom1(self, f):
        return f[0]

    def cod1(self, f):
        return f[0]

    def id1(self, a):
        return (a, 0)

    def comp1(self, f, g):
        if f[0] != g[0]:
            raise ModelError(f"cannot compose {self.name1(f)} and {self.name1(g)}")
        return (f[0], (f[1] + g[1]) % 2)

    def hom2(self, f, g):
        return [f + (1,), f + (-1,)] if f == g else []

    def src2(self, a):
        return a[:2]

    def tgt2(self, a):
        return a[:2]

    def id2(self, f):
        return f + (1,)

    def vcomp2(self, a, b):
        if a[:2] != b[:2]:
            raise ModelError(f"cannot compose {self.name2(a)} and {self.name2(b)} vertically")
        return a[:2] + (a[2] * b[2],)

    def inv2(self, a):
        return a

    def hcomp2(self, a, b):
        if a[0] != b[0]:
            raise ModelError(f"cannot compose {self.name2(a)} and {self.name2(b)} horizontally")
        return (a[0], (a[1] + b[1]) % 2, a[2] * b[2])

    def ltensor1(self, a, f):
        return (a + f[0], f[1])

    def rtensor1(self, f, a):
        return (f[0] + a, f[1])

    def ltensor2(self, a, x):
        return (a + x[0], x[1], x[2])

    def rtensor2(self, x, a):
        return (x[0] + a, x[1], x[2])

    def beta_degree(self, a: int, b: int) -> int:
        return (a + b) % 2 if self.braiding == "sum" else (a * b) % 2

    def is_braiding(self, f) -> bool:
        """Whether ``f`` equals beta(m, n) for some pair of integers."""
        k, i = f
        if self.braiding == "sum":
            return i == k % 2
        return i == 0 or k % 2 == 0

    def phi(self, f, g):
        sign = int(KOSZUL[f[1], g[1]])
        if self.variant == "braid-trivial" and (self.is_braiding(f) or self.is_braiding(g)):
            sign = 1
        return (f[0] + g[0], (f[1] + g[1]) % 2, sign)

    def beta(self, a, b):
        return (a + b, self.beta_degree(a, b))

    def cells1(self):
        return [(a, i) for a in self.objects() for i in (0, 1)]

    def cells2(self):
        return [(a, i, s) for a in self.objects() for i in (0, 1) for s in (1, -1)]

    def object(self, name):
        try:
            return int(name)
        except (TypeError, ValueError):
            raise ModelError(f"{self.name} has no object {name!r}") from None

    def cell1(self, name):
        match = _CELL1.match(str(name).replace(" ", ""))
        if not match:
            raise ModelError(f"{self.name} has no 1-cell {name!r}")
        return (int(match.group(1)), int(match.group(2)))

    def cell2(self, name):
        match = _CELL2.match(str(name).replace(" ", ""))
        if not match:
            raise ModelError(f"{self.name} has no 2-cell {name!r}")
        sign = -1 if match.group(3) == "-I" else 1
        return (int(match.group(1)), int(match.group(2)), sign)

    def name1(self, f):
        return f"({f[0]},{f[1]})"

    def name2(self, a):
        return f"({a[0]},{a[1]},{SIGN_LABEL[a[2]]})"

    def label1(self, f):
        return str(f[1])

    def label2(self, a):
        return SIGN_LABEL[a[2]]

    def to_dict(self) -> dict:
        return {
            "example": {
                "name": "q",
                "window": self.window,
                "variant": self.variant,
                "braiding": self.braiding,
            }
        }


def sphere_q(window: int = DEFAULT_WINDOW, variant: str = DEFAULT_VARIANT,
             braiding: str = DEFAULT_BRAIDING) -> SphereQ:
    return SphereQ(window, variant, braiding)


def deloop_p() -> TableModel:
    return deloop(picard_p(), name="deloop-p")


def _from_example(entry: dict, **overrides) -> ModelBase:
    name = entry.get("name")
    if name == "q":
        params = {k: entry[k] for k in ("window", "variant", "braiding") if k in entry}
        params.update({k: v for k, v in overrides.items() if v is not None})
        return sphere_q(**params)
    if name == "deloop-p":
        return deloop_p()
    raise ModelError(f"unknown example model {name!r}")


def resolve_model(name: str, window: int | None = None, variant: str | None = None,
                  braiding: str | None = None) -> ModelBase:
    """
    A built-in example by name (``q``, ``deloop-p``), otherwise a model file.
    ``window``, ``variant`` and ``braiding`` apply to the sphere example.
    """
    overrides = {"window": window, "variant": variant, "braiding": braiding}
    if name in BUILTIN_MODELS:
        return _from_example({"name": name}, **overrides)
    path = Path(name)
    if not path.exists():
        raise ModelError(f"no built-in model or file named {name!r} (built-ins: {', '.join(BUILTIN_MODELS)})")
    data = read_model_file(path)
    if isinstance(data, dict) and "example" in data:
        return _from_example(data["example"], **overrides)
    return model_from_dict(data, name=data.get("name", path.stem) if isinstance(data, dict) else None)
