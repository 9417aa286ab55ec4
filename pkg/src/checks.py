# checks.py – exhaustive axiom checkers for finite models

"""
Every checker enumerates all instances of its axioms over the model's objects,
1-cells and 2-cells (a computed model such as the sphere example exposes a
finite window of them) and records the outcome in a Report. Failing instances
are data, not errors.
"""

from __future__ import annotations

import logging

from model import ModelBase
from report import Report, Tally

logger = logging.getLogger(__name__)


def _ends(m: ModelBase, f):
    return m.dom1(f), m.cod1(f)


# ---------------------------------------------------------------------------
# stringent monoidal structure
# ---------------------------------------------------------------------------


def _strict_functors(m: ModelBase) -> Tally:
    t = Tally("stringent.iii", "L_A and R_A are strict 2-functors with L_A L_B = L_{A*B}, "
              "R_B R_A = R_{A*B}, L_A R_B = R_B L_A", show=str)
    objs, c1, c2 = m.objects(), m.cells1(), m.cells2()
    u = m.unit
    for a in objs:
        t.check({"A": m.name0(a), "law": "unit left"}, m.tensor(u, a), a)
        t.check({"A": m.name0(a), "law": "unit right"}, m.tensor(a, u), a)
        for b in objs:
            for c in objs:
                t.check({"A": m.name0(a), "B": m.name0(b), "C": m.name0(c), "law": "associative"},
                        m.tensor(m.tensor(a, b), c), m.tensor(a, m.tensor(b, c)))
    for a in objs:
        an = m.name0(a)
        for b in objs:
            t.check({"A": an, "B": m.name0(b), "law": "L_A id"},
                    m.name1(m.ltensor1(a, m.id1(b))), m.name1(m.id1(m.tensor(a, b))))
            t.check({"A": an, "B": m.name0(b), "law": "R_A id"},
                    m.name1(m.rtensor1(m.id1(b), a)), m.name1(m.id1(m.tensor(b, a))))
        for f, g in m.composable1():
            inst = {"A": an, "f": m.name1(f), "g": m.name1(g)}
            t.check({**inst, "law": "L_A comp"}, m.name1(m.ltensor1(a, m.comp1(f, g))),
                    m.name1(m.comp1(m.ltensor1(a, f), m.ltensor1(a, g))))
            t.check({**inst, "law": "R_A comp"}, m.name1(m.rtensor1(m.comp1(f, g), a)),
                    m.name1(m.comp1(m.rtensor1(f, a), m.rtensor1(g, a))))
        for f in c1:
            inst = {"A": an, "f": m.name1(f)}
            t.check({**inst, "law": "L_A id2"}, m.name2(m.ltensor2(a, m.id2(f))),
                    m.name2(m.id2(m.ltensor1(a, f))))
            t.check({**inst, "law": "R_A id2"}, m.name2(m.rtensor2(m.id2(f), a)),
                    m.name2(m.id2(m.rtensor1(f, a))))
        for x, y in m.composable2():
            inst = {"A": an, "a": m.name2(x), "b": m.name2(y)}
            t.check({**inst, "law": "L_A vertical"}, m.name2(m.ltensor2(a, m.vcomp2(x, y))),
                    m.name2(m.vcomp2(m.ltensor2(a, x), m.ltensor2(a, y))))
            t.check({**inst, "law": "R_A vertical"}, m.name2(m.rtensor2(m.vcomp2(x, y), a)),
                    m.name2(m.vcomp2(m.rtensor2(x, a), m.rtensor2(y, a))))
        for x, y in m.stackable2():
            inst = {"A": an, "a": m.name2(x), "b": m.name2(y)}
            t.check({**inst, "law": "L_A horizontal"}, m.name2(m.ltensor2(a, m.hcomp2(x, y))),
                    m.name2(m.hcomp2(m.ltensor2(a, x), m.ltensor2(a, y))))
            t.check({**inst, "law": "R_A horizontal"}, m.name2(m.rtensor2(m.hcomp2(x, y), a)),
                    m.name2(m.hcomp2(m.rtensor2(x, a), m.rtensor2(y, a))))
    for f in c1:
        t.check({"f": m.name1(f), "law": "L_1"}, m.name1(m.ltensor1(u, f)), m.name1(f))
        t.check({"f": m.name1(f), "law": "R_1"}, m.name1(m.rtensor1(f, u)), m.name1(f))
        for a in objs:
            for b in objs:
                inst = {"A": m.name0(a), "B": m.name0(b), "f": m.name1(f)}
                t.check({**inst, "law": "L_A L_B"}, m.name1(m.ltensor1(a, m.ltensor1(b, f))),
                        m.name1(m.ltensor1(m.tensor(a, b), f)))
                t.check({**inst, "law": "R_B R_A"}, m.name1(m.rtensor1(m.rtensor1(f, a), b)),
                        m.name1(m.rtensor1(f, m.tensor(a, b))))
                t.check({**inst, "law": "L_A R_B"}, m.name1(m.ltensor1(a, m.rtensor1(f, b))),
                        m.name1(m.rtensor1(m.ltensor1(a, f), b)))
    for x in c2:
        for a in objs:
            for b in objs:
                inst = {"A": m.name0(a), "B": m.name0(b), "a": m.name2(x)}
                t.check({**inst, "law": "L_A L_B"}, m.name2(m.ltensor2(a, m.ltensor2(b, x))),
                        m.name2(m.ltensor2(m.tensor(a, b), x)))
                t.check({**inst, "law": "R_B R_A"}, m.name2(m.rtensor2(m.rtensor2(x, a), b)),
                        m.name2(m.rtensor2(x, m.tensor(a, b))))
                t.check({**inst, "law": "L_A R_B"}, m.name2(m.ltensor2(a, m.rtensor2(x, b))),
                        m.name2(m.rtensor2(m.ltensor2(a, x), b)))
    return t


def _phi_invertible(m: ModelBase) -> Tally:
    t = Tally("stringent.iv", "phi_{f,g} is a 2-isomorphism with the interchangor endpoints",
              show=str)
    for f in m.cells1():
        for g in m.cells1():
            inst = {"f": m.name1(f), "g": m.name1(g)}
            p = m.phi(f, g)
            src = m.comp1(m.ltensor1(m.dom1(f), g), m.rtensor1(f, m.cod1(g)))
            t.check({**inst, "law": "source"}, m.name1(m.src2(p)), m.name1(src))
            t.check({**inst, "law": "target"}, m.name1(m.tgt2(p)), m.name1(m.tensor1(f, g)))
            inv = m.inv2(p)
            if inv is None:
                t.fail({**inst, "law": "inverse"}, m.name2(p), "no inverse")
                continue
            t.check({**inst, "law": "inverse"}, m.name2(m.vcomp2(p, inv)), m.name2(m.id2(m.src2(p))))
            t.check({**inst, "law": "inverse"}, m.name2(m.vcomp2(inv, p)), m.name2(m.id2(m.tgt2(p))))
    return t


def _nudging(m: ModelBase) -> Tally:
    t = Tally("stringent.v", "f*g is the nudged composite; tensoring with identities whiskers",
              show=m.name1)
    for f in m.cells1():
        for b in m.objects():
            t.check({"f": m.name1(f), "B": m.name0(b)}, m.tensor1(f, m.id1(b)), m.rtensor1(f, b))
            t.check({"A": m.name0(b), "f": m.name1(f)}, m.tensor1(m.id1(b), f), m.ltensor1(b, f))
        for g in m.cells1():
            h = m.tensor1(f, g)
            t.check({"f": m.name1(f), "g": m.name1(g), "law": "domain"},
                    m.name0(m.dom1(h)), m.name0(m.tensor(m.dom1(f), m.dom1(g))))
            t.check({"f": m.name1(f), "g": m.name1(g), "law": "codomain"},
                    m.name0(m.cod1(h)), m.name0(m.tensor(m.cod1(f), m.cod1(g))))
    return t


def _phi_whiskering(m: ModelBase) -> Tally:
    t = Tally("stringent.vi", "phi is compatible with L_A and R_A", show=m.name2)
    objs, c1 = m.objects(), m.cells1()
    for g in c1:
        for h in c1:
            for a in objs:
                inst = {"A": m.name0(a), "g": m.name1(g), "h": m.name1(h)}
                t.check({**inst, "law": "phi_{A*g,h}"}, m.phi(m.ltensor1(a, g), h),
                        m.ltensor2(a, m.phi(g, h)))
                t.check({**inst, "law": "phi_{g*A,h}"}, m.phi(m.rtensor1(g, a), h),
                        m.phi(g, m.ltensor1(a, h)))
                t.check({**inst, "law": "phi_{g,h*A}"}, m.phi(g, m.rtensor1(h, a)),
                        m.rtensor2(m.phi(g, h), a))
    return t


def _phi_identities(m: ModelBase) -> Tally:
    t = Tally("stringent.vii", "phi_{f,id} = id and phi_{id,g} = id", show=m.name2)
    for f in m.cells1():
        for a in m.objects():
            inst = {"f": m.name1(f), "A": m.name0(a)}
            p = m.phi(f, m.id1(a))
            t.check({**inst, "law": "phi_{f,id}"}, p, m.id2(m.src2(p)))
            p = m.phi(m.id1(a), f)
            t.check({**inst, "law": "phi_{id,f}"}, p, m.id2(m.src2(p)))
    return t


def _phi_natural(m: ModelBase) -> Tally:
    t = Tally("stringent.viii", "phi is natural in both arguments", show=m.name2)
    for x in m.cells2():
        f, f2 = m.src2(x), m.tgt2(x)
        a, a2 = _ends(m, f)
        for y in m.cells2():
            g, g2 = m.src2(y), m.tgt2(y)
            b, b2 = _ends(m, g)
            lhs = m.vcomp2(m.phi(f, g), m.hcomp2(m.rtensor2(x, b), m.ltensor2(a2, y)))
            rhs = m.vcomp2(m.hcomp2(m.ltensor2(a, y), m.rtensor2(x, b2)), m.phi(f2, g2))
            t.check({"alpha": m.name2(x), "beta": m.name2(y)}, lhs, rhs)
    return t


def _phi_composition(m: ModelBase) -> Tally:
    t = Tally("stringent.ix", "phi of a composite is the pasting of phis (both arguments)",
              show=m.name2)
    c1 = m.cells1()
    for f in c1:
        a, a2 = _ends(m, f)
        for g, h in m.composable1():
            lhs = m.phi(f, m.comp1(g, h))
            rhs = m.vcomp2(
                m.hcomp2(m.id2(m.ltensor1(a, g)), m.phi(f, h)),
                m.hcomp2(m.phi(f, g), m.id2(m.ltensor1(a2, h))),
            )
            t.check({"f": m.name1(f), "g": m.name1(g), "h": m.name1(h), "side": "right"}, lhs, rhs)
    for g in c1:
        b, b2 = _ends(m, g)
        for f, f2 in m.composable1():
            lhs = m.phi(m.comp1(f, f2), g)
            rhs = m.vcomp2(
                m.hcomp2(m.phi(f, g), m.id2(m.rtensor1(f2, b2))),
                m.hcomp2(m.id2(m.rtensor1(f, b)), m.phi(f2, g)),
            )
            t.check({"f": m.name1(f), "f'": m.name1(f2), "g": m.name1(g), "side": "left"}, lhs, rhs)
    return t


def check_stringent(m: ModelBase) -> Report:
    report = Report(f"stringent monoidal axioms: {m.name}")
    window = getattr(m, "window", None)
    if window is not None:
        report.notes.append(f"objects restricted to [-{window}, {window}]")
    for build in (_strict_functors, _phi_invertible, _nudging, _phi_whiskering,
                  _phi_identities, _phi_natural, _phi_composition):
        result = build(m).done()
        logger.debug("%s: %s (%d instances)", result.axiom, result.status, result.instances)
        report.add(result)
    logger.info("%s: %s", report.title, "pass" if report.passed else "fail")
    return report


# ---------------------------------------------------------------------------
# symmetric structure
# ---------------------------------------------------------------------------


def check_symmetric(m: ModelBase) -> Report:
    report = Report(f"symmetric axioms: {m.name}")
    objs, c1 = m.objects(), m.cells1()
    n0 = m.name0

    t = Tally("symmetric.i", "beta_{A,B} then beta_{B,A} is the identity", show=m.name1)
    for a in objs:
        for b in objs:
            t.check({"A": n0(a), "B": n0(b)}, m.comp1(m.beta(a, b), m.beta(b, a)), m.id1(m.tensor(a, b)))
    report.add(t.done())

    t = Tally("symmetric.ii", "beta of a tensor is the composite of elementary braidings",
              show=m.name1)
    for a in objs:
        for b in objs:
            for c in objs:
                inst = {"A": n0(a), "B": n0(b), "C": n0(c)}
                t.check({**inst, "side": "beta_{A*B,C}"}, m.beta(m.tensor(a, b), c),
                        m.comp1(m.ltensor1(a, m.beta(b, c)), m.rtensor1(m.beta(a, c), b)))
                t.check({**inst, "side": "beta_{A,B*C}"}, m.beta(a, m.tensor(b, c)),
                        m.comp1(m.rtensor1(m.beta(a, b), c), m.ltensor1(b, m.beta(a, c))))
    report.add(t.done())

    t = Tally("symmetric.iii", "beta is natural in 1-cells on either side", show=m.name1)
    for f in c1:
        a, a2 = _ends(m, f)
        for b in objs:
            inst = {"f": m.name1(f), "B": n0(b)}
            t.check({**inst, "side": "left"}, m.comp1(m.rtensor1(f, b), m.beta(a2, b)),
                    m.comp1(m.beta(a, b), m.ltensor1(b, f)))
            t.check({**inst, "side": "right"}, m.comp1(m.ltensor1(b, f), m.beta(b, a2)),
                    m.comp1(m.beta(b, a), m.rtensor1(f, b)))
    report.add(t.done())

    t = Tally("symmetric.iv", "phi with a braiding argument is the identity", show=m.label2)
    for f in c1:
        for b in objs:
            for c in objs:
                inst = {"f": m.name1(f), "B": n0(b), "C": n0(c)}
                p = m.phi(f, m.beta(b, c))
                t.check({**inst, "side": "phi_{f,beta}"}, p, m.id2(m.src2(p)))
                p = m.phi(m.beta(b, c), f)
                t.check({**inst, "side": "phi_{beta,f}"}, p, m.id2(m.src2(p)))
    report.add(t.done())
    logger.info("%s: %s", report.title, "pass" if report.passed else "fail")
    return report


def check_interchange_law(m: ModelBase) -> Report:
    """Both orders of horizontal composition, and compatibility with vertical composition."""
    report = Report(f"interchange law: {m.name}")
    t = Tally("interchange.orders", "a*b = (a*id)(id*b) = (id*b)(a*id)", show=m.name2)
    for x, y in m.stackable2():
        f, f2, g, g2 = m.src2(x), m.tgt2(x), m.src2(y), m.tgt2(y)
        inst = {"a": m.name2(x), "b": m.name2(y)}
        first = m.vcomp2(m.hcomp2(x, m.id2(g)), m.hcomp2(m.id2(f2), y))
        second = m.vcomp2(m.hcomp2(m.id2(f), y), m.hcomp2(x, m.id2(g2)))
        t.check({**inst, "order": "first"}, m.hcomp2(x, y), first)
        t.check({**inst, "order": "second"}, first, second)
    report.add(t.done())

    t = Tally("interchange.vertical", "(a'a)*(b'b) = (a'*b')(a*b)", show=m.name2)
    pairs = m.composable2()
    for x, x2 in pairs:
        for y, y2 in pairs:
            if m.cod1(m.src2(x)) != m.dom1(m.src2(y)):
                continue
            t.check({"a": m.name2(x), "a'": m.name2(x2), "b": m.name2(y), "b'": m.name2(y2)},
                    m.hcomp2(m.vcomp2(x, x2), m.vcomp2(y, y2)),
                    m.vcomp2(m.hcomp2(x, y), m.hcomp2(x2, y2)))
    report.add(t.done())
    return report
