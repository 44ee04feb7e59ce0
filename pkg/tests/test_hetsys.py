from fractions import Fraction

import pytest

from hetg2.exterior import Form, e
from hetg2.hetsys import Check, GaugeField, integrality_check, scal_identity_check, signature, verify
from hetg2.nilalg import catalog, catalog_entry, scalar_curvature
from hetg2.solutions import all_solutions, family_n2

H7 = catalog_entry("h7").algebra


def test_gauge_field_validation():
    with pytest.raises(ValueError):
        GaugeField((e(12),), ())
    with pytest.raises(ValueError):
        GaugeField((e(12),), (0,))
    with pytest.raises(ValueError):
        GaugeField((e(123),), (1,))
    g = GaugeField((e(12), Form(7, 0)), (1, "-1/2"))
    assert g.k == 2 and g.eps == (1, Fraction(-1, 2))
    assert g.forms[1].p == 2


def test_trace_square_and_norm():
    g = GaugeField((e(12) + e(34), e(56)), (2, -1))
    assert g.trace_square() == e(1234) * 4
    assert g.norm2() == 2 * 2 - 1


def test_signature():
    assert signature(GaugeField((e(12), e(34), e(56)), (1, -2, 3))) == (2, 1)
    assert signature(GaugeField()) == (0, 0)


def test_check_lines():
    assert Check("tau2", True).line() == "CHECK tau2 PASS"
    assert Check("bianchi", None).line() == "CHECK bianchi N/A"
    assert Check("closed1", False, e(123) * 2).line() == "CHECK closed1 FAIL residual=2 e123"
    assert Check("x", False, Fraction(-1, 3)).line() == "CHECK x FAIL residual=-1/3"


def test_scalar_curvature_h7():
    assert scalar_curvature(H7) == Fraction(-3, 2)


def test_h7_without_gauge_fails_bianchi_only():
    rep = verify(H7, GaugeField())
    assert rep["tau2"].passed
    assert rep["bianchi"].passed is False
    assert rep.lines()[-1].startswith("CHECK bianchi FAIL residual=")
    assert rep.lam == Fraction(1, 2) and rep.tau1_zero


def test_known_solutions_verify():
    for s in all_solutions():
        rep = verify(s.algebra, s.gauge)
        assert rep.passed, (s.key, rep.lines())
        assert scal_identity_check(s.algebra, s.gauge) == 0
        assert integrality_check(s.gauge)


def test_flipped_sign_breaks_bianchi():
    s = family_n2(1)
    g = GaugeField(s.gauge.forms, tuple(-x for x in s.gauge.eps))
    rep = verify(s.algebra, g)
    assert not rep.passed and rep["bianchi"].passed is False
    assert all(rep[f"instanton{r}"].passed for r in range(1, g.k + 1))


def test_non_g2t_entries_are_not_applicable():
    for entry in catalog():
        rep = verify(entry.algebra, GaugeField())
        if not rep["tau2"].passed:
            assert rep["bianchi"].passed is None
            assert rep.scal_residual is None
            assert rep.notes


def test_non_instanton_detected():
    rep = verify(H7, GaugeField((e(12),), (1,)))
    assert rep["closed1"].passed
    assert rep["instanton1"].passed is False
