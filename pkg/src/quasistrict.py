# quasistrict.py – stringent <-> quasistrict tables

"""
``to_quasistrict`` extends a stringent model by the 2-cells

* ``Phi[(f', g', f, g)] : (f' * g') (f * g) => (f'f) * (g'g)`` for composable pairs, and
* ``beta2[(f, g)] : (g * f) beta_{A,B} => beta_{A',B'} (f * g)``,

each computed by building the corresponding script over the model's own cells
and evaluating it. ``from_quasistrict`` keeps only ``phi_{f,g} =
Phi[(f, id, id, g)]`` and the braiding.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from checks import check_stringent, check_symmetric
from errors import AxiomPrereqFailed, InconsistentTables, MalformedTables, ModelError
from model import ModelBase, Presentation, tautological
from report import Report, Tally
from twocell import build_beta_fg, build_Phi

logger = logging.getLogger(__name__)


@dataclass
class QuasistrictData:
    base: ModelBase
    Phi: dict = field(default_factory=dict)
    beta2: dict = field(default_factory=dict)
    sigma: dict = field(default_factory=dict)
    R: dict = field(default_factory=dict)
    S: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return f"quasistrict {self.base.name}"


def composable_quadruples(m: ModelBase):
    """``(f', g', f, g)`` with f' after f and g' after g."""
    pairs = m.composable1()
    for f, fp in pairs:
        for g, gp in pairs:
            yield fp, gp, f, g


def derive_Phi(p: Presentation, fp, gp, f, g):
    return p.eval2(build_Phi(p.diagram(fp), p.diagram(gp), p.diagram(f), p.diagram(g)))


def derive_beta(p: Presentation, f, g):
    return p.eval2(build_beta_fg(p.diagram(f), p.diagram(g)))


def _on(m: ModelBase, cell, want):
    """``cell`` if it is a 2-cell on the 1-cell ``want``, else None."""
    return cell if m.src2(cell) == want else None


def to_quasistrict(m: ModelBase, force: bool = False) -> QuasistrictData:
    """
    Entries whose derived cell does not sit on the expected 1-cell are None;
    with ``force`` this happens when a braiding with a unit argument is not an
    identity, since the unit has no wire.
    """
    if not force:
        failed = check_stringent(m).failed() + check_symmetric(m).failed()
        if failed:
            raise AxiomPrereqFailed(
                "model fails " + ", ".join(r.axiom for r in failed) + " (use force to convert anyway)"
            )
    p = tautological(m)
    q = QuasistrictData(m)
    for fp, gp, f, g in composable_quadruples(m):
        want = m.comp1(m.tensor1(f, g), m.tensor1(fp, gp))
        q.Phi[(fp, gp, f, g)] = _on(m, derive_Phi(p, fp, gp, f, g), want)
    for f in m.cells1():
        for g in m.cells1():
            want = m.comp1(m.beta(m.dom1(f), m.dom1(g)), m.tensor1(g, f))
            q.beta2[(f, g)] = _on(m, derive_beta(p, f, g), want)
    missing = sum(x is None for x in q.Phi.values()) + sum(x is None for x in q.beta2.values())
    if missing:
        logger.info("%s: %d derived entries have the wrong endpoints", m.name, missing)

    # sigma, R and S are identities; an entry is None when its two endpoints differ
    objs = m.objects()
    for a in objs:
        for b in objs:
            ident = m.id1(m.tensor(a, b))
            twice = m.comp1(m.beta(a, b), m.beta(b, a))
            q.sigma[(a, b)] = m.id2(ident) if twice == ident else None
            for c in objs:
                lhs = m.beta(m.tensor(a, b), c)
                rhs = m.comp1(m.ltensor1(a, m.beta(b, c)), m.rtensor1(m.beta(a, c), b))
                q.R[(a, b, c)] = m.id2(lhs) if lhs == rhs else None
                lhs = m.beta(a, m.tensor(b, c))
                rhs = m.comp1(m.rtensor1(m.beta(a, b), c), m.ltensor1(b, m.beta(a, c)))
                q.S[(a, b, c)] = m.id2(lhs) if lhs == rhs else None
    logger.info("derived %d Phi and %d beta entries for %s", len(q.Phi), len(q.beta2), m.name)
    return q


class QuasistrictModel(ModelBase):
    """The base model with its interchangor and braiding read off tables; nothing falls back to the base."""

    def __init__(self, base: ModelBase, phi_table: dict, beta_table: dict):
        self.base = base
        self._phi = phi_table
        self._beta = beta_table
        self.name = base.name
        for attr in ("window", "default_object"):
            if hasattr(base, attr):
                setattr(self, attr, getattr(base, attr))

    def phi(self, f, g):
        try:
            return self._phi[(f, g)]
        except KeyError:
            raise MalformedTables(f"no interchangor entry for ({self.name1(f)}, {self.name1(g)})") from None

    def beta(self, a, b):
        try:
            return self._beta[(a, b)]
        except KeyError:
            raise MalformedTables(f"no braiding entry for ({self.name0(a)}, {self.name0(b)})") from None

    def objects(self):
        return self.base.objects()

    @property
    def unit(self):
        return self.base.unit

    @property
    def assignment(self):
        return self.base.assignment

    def tensor(self, a, b):
        return self.base.tensor(a, b)

    def hom1(self, a, b):
        return self.base.hom1(a, b)

    def dom1(self, f):
        return self.base.dom1(f)

    def cod1(self, f):
        return self.base.cod1(f)

    def id1(self, a):
        return self.base.id1(a)

    def comp1(self, f, g):
        return self.base.comp1(f, g)

    def hom2(self, f, g):
        return self.base.hom2(f, g)

    def src2(self, a):
        return self.base.src2(a)

    def tgt2(self, a):
        return self.base.tgt2(a)

    def id2(self, f):
        return self.base.id2(f)

    def vcomp2(self, a, b):
        return self.base.vcomp2(a, b)

    def inv2(self, a):
        return self.base.inv2(a)

    def hcomp2(self, a, b):
        return self.base.hcomp2(a, b)

    def ltensor1(self, a, f):
        return self.base.ltensor1(a, f)

    def rtensor1(self, f, a):
        return self.base.rtensor1(f, a)

    def ltensor2(self, a, x):
        return self.base.ltensor2(a, x)

    def rtensor2(self, x, a):
        return self.base.rtensor2(x, a)

    def cells1(self):
        return self.base.cells1()

    def cells2(self):
        return self.base.cells2()

    def object(self, name):
        return self.base.object(name)

    def cell1(self, name):
        return self.base.cell1(name)

    def cell2(self, name):
        return self.base.cell2(name)

    def name0(self, a):
        return self.base.name0(a)

    def name1(self, f):
        return self.base.name1(f)

    def name2(self, a):
        return self.base.name2(a)

    def label1(self, f):
        return self.base.label1(f)

    def label2(self, a):
        return self.base.label2(a)


def from_quasistrict(q: QuasistrictData) -> QuasistrictModel:
    m = q.base
    phi_table, beta_table = {}, {}
    for f in m.cells1():
        a = m.dom1(f)
        for g in m.cells1():
            b2 = m.cod1(g)
            key = (f, m.id1(b2), m.id1(a), g)
            if key not in q.Phi:
                raise InconsistentTables(f"Phi has no entry for phi({m.name1(f)}, {m.name1(g)})")
            cell = q.Phi[key]
            if cell is None:
                raise InconsistentTables(f"Phi entry for ({m.name1(f)}, {m.name1(g)}) has the wrong endpoints")
            want_src = m.comp1(m.ltensor1(a, g), m.rtensor1(f, b2))
            if m.src2(cell) != want_src or m.tgt2(cell) != m.tensor1(f, g):
                raise InconsistentTables(
                    f"Phi entry for ({m.name1(f)}, {m.name1(g)}) has the wrong endpoints"
                )
            phi_table[(f, g)] = cell
    for a in m.objects():
        for b in m.objects():
            beta_table[(a, b)] = m.beta(a, b)
    return QuasistrictModel(m, phi_table, beta_table)


def tables_equal(m1: ModelBase, m2: ModelBase) -> list[str]:
    """Entries where the two models differ on their shared carriers; empty if none."""
    diffs = []
    if [m1.name0(a) for a in m1.objects()] != [m2.name0(a) for a in m2.objects()]:
        diffs.append("objects differ")
        return diffs
    for f in m1.cells1():
        for g in m1.cells1():
            if m1.name2(m1.phi(f, g)) != m2.name2(m2.phi(f, g)):
                diffs.append(f"phi({m1.name1(f)}, {m1.name1(g)})")
    for a in m1.objects():
        for b in m1.objects():
            if m1.name1(m1.beta(a, b)) != m2.name1(m2.beta(a, b)):
                diffs.append(f"beta({m1.name0(a)}, {m1.name0(b)})")
    return diffs


def _entry(table: dict, key, name: str):
    cell = table.get(key)
    if cell is None:
        raise InconsistentTables(f"{name} entry " + ("has the wrong endpoints" if key in table else "is missing"))
    return cell


def _compare(t: Tally, inst: dict, sides) -> None:
    """``sides()`` gives both sides; a missing entry or a composite that does not exist fails."""
    try:
        lhs, rhs = sides()
    except ModelError as exc:
        t.fail(inst, "endpoints differ", str(exc))
        return
    t.check(inst, lhs, rhs)


def check_quasistrict(m: ModelBase, q: QuasistrictData) -> Report:
    report = Report(f"quasistrict conditions: {m.name}")
    n0, n1, n2 = m.name0, m.name1, m.name2
    objs = m.objects()

    def is_id(table, key, name):
        cell = _entry(table, key, name)
        return cell, m.id2(m.src2(cell))

    t = Tally("QS.1", "sigma, R and S are identities", show=n2)
    for name, table in (("sigma", q.sigma), ("R", q.R), ("S", q.S)):
        for key, cell in table.items():
            inst = {"table": name, "objects": ",".join(n0(x) for x in key)}
            if cell is None:
                t.fail(inst, "endpoints differ", "identity")
            else:
                t.check(inst, cell, m.id2(m.src2(cell)))
    report.add(t.done())

    t = Tally("QS.2", "beta_{f,g} is the identity when f or g is an identity", show=n2)
    for f, g in q.beta2:
        if m.is_identity1(f) or m.is_identity1(g):
            _compare(t, {"f": n1(f), "g": n1(g)}, lambda: is_id(q.beta2, (f, g), "beta"))
    report.add(t.done())

    braidings = {m.beta(a, b) for a in objs for b in objs}
    t = Tally("QS.3", "Phi is the identity when f' or g is a braiding", show=m.label2)
    for key in q.Phi:
        fp, gp, f, g = key
        if fp in braidings or g in braidings:
            inst = {"f'": n1(fp), "g'": n1(gp), "f": n1(f), "g": n1(g)}
            _compare(t, inst, lambda: is_id(q.Phi, key, "Phi"))
    report.add(t.done())

    t = Tally("CSS.2a", "beta_{1,A} and beta_{A,1} are identities", show=n1)
    for a in objs:
        t.check({"A": n0(a), "side": "beta_{1,A}"}, m.beta(m.unit, a), m.id1(a))
        t.check({"A": n0(a), "side": "beta_{A,1}"}, m.beta(a, m.unit), m.id1(a))
    report.add(t.done())

    u = m.unit
    t = Tally("CSS.2b", "R and S with a unit argument are the identity of beta_{A,B}", show=n2)
    for a in objs:
        for b in objs:
            want = m.id2(m.beta(a, b))
            for name, key in (("R_{1,A|B}", ("R", (u, a, b))), ("R_{A,1|B}", ("R", (a, u, b))),
                              ("S_{A|1,B}", ("S", (a, u, b))), ("S_{A|B,1}", ("S", (a, b, u)))):
                cell = getattr(q, key[0]).get(key[1])
                inst = {"A": n0(a), "B": n0(b), "entry": name}
                if cell is None:
                    t.fail(inst, "endpoints differ", n2(want))
                else:
                    t.check(inst, cell, want)
    report.add(t.done())

    t = Tally("CSS.2c", "R_{A,B|1} and S_{1|A,B} are the identity of id_{A*B}", show=n2)
    for a in objs:
        for b in objs:
            want = m.id2(m.id1(m.tensor(a, b)))
            for name, key in (("R_{A,B|1}", ("R", (a, b, u))), ("S_{1|A,B}", ("S", (u, a, b)))):
                cell = getattr(q, key[0]).get(key[1])
                inst = {"A": n0(a), "B": n0(b), "entry": name}
                if cell is None:
                    t.fail(inst, "endpoints differ", n2(want))
                else:
                    t.check(inst, cell, want)
    report.add(t.done())

    t = Tally("Phi.cubical", "Phi is the identity when g or f' is an identity", show=n2)
    for key in q.Phi:
        fp, gp, f, g = key
        if m.is_identity1(g) or m.is_identity1(fp):
            inst = {"f'": n1(fp), "g'": n1(gp), "f": n1(f), "g": n1(g)}
            _compare(t, inst, lambda: is_id(q.Phi, key, "Phi"))
    report.add(t.done())

    t = Tally("Phi.unique", "Phi_{(f',g'),(f,g)} is phi_{f',g} whiskered", show=n2)
    for key in q.Phi:
        fp, gp, f, g = key

        def sides():
            b, a2 = m.dom1(g), m.cod1(fp)
            want = m.hcomp2(m.hcomp2(m.id2(m.rtensor1(f, b)), m.phi(fp, g)), m.id2(m.ltensor1(a2, gp)))
            return _entry(q.Phi, key, "Phi"), want

        _compare(t, {"f'": n1(fp), "g'": n1(gp), "f": n1(f), "g": n1(g)}, sides)
    report.add(t.done())

    def Phi(*key):
        return _entry(q.Phi, key, "Phi")

    def beta2(*key):
        return _entry(q.beta2, key, "beta")

    t = Tally("Phi.coherence", "the two ways of merging three layers with Phi agree", show=n2)
    for f, f2 in m.composable1():
        for f3 in m.cells1():
            if m.dom1(f3) != m.cod1(f2):
                continue
            for g, g2 in m.composable1():
                for g3 in m.cells1():
                    if m.dom1(g3) != m.cod1(g2):
                        continue

                    def sides():
                        lhs = m.vcomp2(
                            m.hcomp2(Phi(f2, g2, f, g), m.id2(m.tensor1(f3, g3))),
                            Phi(f3, g3, m.comp1(f, f2), m.comp1(g, g2)),
                        )
                        rhs = m.vcomp2(
                            m.hcomp2(m.id2(m.tensor1(f, g)), Phi(f3, g3, f2, g2)),
                            Phi(m.comp1(f2, f3), m.comp1(g2, g3), f, g),
                        )
                        return lhs, rhs

                    _compare(t, {"f": n1(f), "f'": n1(f2), "f''": n1(f3),
                                 "g": n1(g), "g'": n1(g2), "g''": n1(g3)}, sides)
    report.add(t.done())

    t = Tally("beta.coherence", "beta_{f,g} is compatible with Phi on composites", show=n2)
    for f, f2 in m.composable1():
        for g, g2 in m.composable1():

            def sides():
                a, b = m.dom1(f), m.dom1(g)
                a3, b3 = m.cod1(f2), m.cod1(g2)
                lhs = m.vcomp2(
                    m.hcomp2(m.id2(m.beta(a, b)), Phi(g2, f2, g, f)),
                    beta2(m.comp1(f, f2), m.comp1(g, g2)),
                )
                rhs = m.vcomp2(
                    m.vcomp2(
                        m.hcomp2(beta2(f, g), m.id2(m.tensor1(g2, f2))),
                        m.hcomp2(m.id2(m.tensor1(f, g)), beta2(f2, g2)),
                    ),
                    m.hcomp2(Phi(f2, g2, f, g), m.id2(m.beta(a3, b3))),
                )
                return lhs, rhs

            _compare(t, {"f": n1(f), "f'": n1(f2), "g": n1(g), "g'": n1(g2)}, sides)
    report.add(t.done())
    logger.info("%s: %s", report.title, "pass" if report.passed else "fail")
    return report
