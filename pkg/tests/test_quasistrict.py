import pytest

from catalog import deloop_p, sphere_q
from errors import AxiomPrereqFailed, InconsistentTables, MalformedTables
from model import tautological
from quasistrict import (
    QuasistrictData,
    QuasistrictModel,
    check_quasistrict,
    composable_quadruples,
    derive_beta,
    derive_Phi,
    from_quasistrict,
    tables_equal,
    to_quasistrict,
)


@pytest.fixture(scope="module")
def p_data():
    return to_quasistrict(deloop_p())


def test_deloop_round_trip(p_data):
    m = deloop_p()
    assert tables_equal(m, from_quasistrict(p_data)) == []
    assert len(p_data.Phi) == len(list(composable_quadruples(m))) == 16
    assert len(p_data.beta2) == 4


def test_deloop_satisfies_the_quasistrict_conditions(p_data):
    report = check_quasistrict(deloop_p(), p_data)
    assert report.passed, report.format_text()


def test_derived_cells_in_the_deloop():
    m = deloop_p()
    p = tautological(m)
    assert derive_Phi(p, "1", "1", "1", "1") == "-I.0"
    assert derive_Phi(p, "0", "1", "1", "0") == "I.0"
    assert m.is_identity2(derive_beta(p, "0", "1"))
    # swapping two odd 1-cells past each other carries the symmetry sign
    assert derive_beta(p, "1", "1") == "-I.0"


def test_sphere_needs_force():
    q = sphere_q(window=1)
    with pytest.raises(AxiomPrereqFailed, match="symmetric.iv"):
        to_quasistrict(q)


def test_forced_sphere_conversion():
    q = sphere_q(window=1)
    data = to_quasistrict(q, force=True)
    assert data.Phi[((1, 1),) * 4] == (2, 0, -1)
    assert tables_equal(q, from_quasistrict(data)) == []
    # symmetric.ii fails under the sum braiding, so R has missing entries
    assert data.R[(1, 1, 1)] is None
    # beta_{0,B} has degree B, which a derivation through wires cannot see
    assert data.beta2[((-1, 0), (0, 0))] is None
    assert data.beta2[((0, 0), (1, 1))] is None
    assert data.beta2[((1, 1), (1, 1))] == (2, 0, -1)
    assert sum(x is None for x in data.beta2.values()) == 16
    report = check_quasistrict(q, data)
    assert not report.passed
    assert "endpoints differ" in report.format_text()


QUASISTRICT_FAILURES = {
    ("literal", "sum"): {"QS.1", "QS.2", "QS.3", "CSS.2a", "CSS.2b", "CSS.2c", "beta.coherence"},
    ("literal", "product"): {"QS.3"},
    ("braid-trivial", "sum"): {"QS.1", "QS.2", "CSS.2a", "CSS.2b", "CSS.2c", "beta.coherence"},
    ("braid-trivial", "product"): set(),
}


@pytest.mark.parametrize("variant, braiding", sorted(QUASISTRICT_FAILURES))
def test_quasistrict_outcomes_on_the_sphere(variant, braiding):
    q = sphere_q(window=2, variant=variant, braiding=braiding)
    report = check_quasistrict(q, to_quasistrict(q, force=True))
    assert {r.axiom for r in report.failed()} == QUASISTRICT_FAILURES[(variant, braiding)]
    assert report.result("Phi.unique").instances == 400
    assert report.result("Phi.coherence").instances == 1600
    assert report.result("beta.coherence").instances == 400


def test_conversion_back_reads_only_the_tables(p_data):
    m = deloop_p()
    one = m.id1(m.dom1("1"))
    changed = QuasistrictData(m, Phi=dict(p_data.Phi), beta2=p_data.beta2)
    changed.Phi[("1", one, one, "1")] = "I.0"
    assert tables_equal(m, from_quasistrict(changed)) == ["phi(1, 1)"]

    bare = QuasistrictModel(m, {}, {})
    with pytest.raises(MalformedTables):
        bare.phi("1", "1")
    with pytest.raises(MalformedTables):
        bare.beta(m.unit, m.unit)


def test_conversion_back_needs_every_interchangor(p_data):
    m = deloop_p()
    one = m.id1(m.dom1("1"))
    partial = QuasistrictData(m, Phi={k: v for k, v in p_data.Phi.items() if k != ("1", one, one, "0")})
    with pytest.raises(InconsistentTables, match="no entry"):
        from_quasistrict(partial)


def test_tables_equal_reports_differences():
    diffs = tables_equal(sphere_q(window=1), sphere_q(window=1, braiding="product"))
    assert "beta(1, 1)" in diffs
    assert tables_equal(sphere_q(window=1), deloop_p()) == ["objects differ"]
