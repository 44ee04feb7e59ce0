from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hetg2 import su2red, su3red
from hetg2.exterior import Form, blades_of_degree, contract, e, hodge, inner, wedge
from hetg2.g2 import (PHI, PSI, NoCharacteristicConnection, classify, codifferential_tau1, torsion, torsion_H,
                      torsion_H_coclosed)
from hetg2.nilalg import abelian, catalog, catalog_entry, ce_differential
from hetg2.parse import parse_algebra
from hetg2.solutions import family_n3, su3_solutions
from test_exterior import forms

NOTCAL = parse_algebra("(0,0,0,e13,0,e15,-e35)", strict=False)
OMEGA = e(12) + e(34) + e(56)
H7 = catalog_entry("h7").algebra


def test_abelian_is_torsion_free():
    c = classify(abelian())
    assert c.torsion_free and c.coclosed and c.g2t


def test_phi_type_decomposition():
    # phi = omega ^ e7 + Re(Omega) on the SU(3) splitting
    re_omega = e(135) - e(146) - e(236) - e(245)
    assert PHI == wedge(OMEGA, e(7)) + re_omega
    # psi = omega^2/2 + (3-form) ^ e7
    rest = PSI - wedge(OMEGA, OMEGA) / 2
    assert rest == wedge(contract(e(7), rest), e(7)) * -1
    assert wedge(PHI, PHI) == Form(7, 6)


def test_notcal_dpsi_contraction():
    t = torsion(NOTCAL)
    assert contract(PSI, t.dpsi) == e(2) * 3
    assert t.tau1 == e(2) / 4


def test_h7_torsion():
    t = torsion(H7)
    assert t.lam == Fraction(1, 2)
    assert t.tau0 == Fraction(6, 7)
    assert torsion_H(H7) == PHI - wedge(OMEGA, e(7)) * 2
    assert torsion_H(H7) == torsion_H_coclosed(H7)


def test_tau3_is_pure():
    for entry in catalog():
        t = torsion(entry.algebra)
        assert not wedge(t.tau3, PHI) and not wedge(t.tau3, PSI)
        assert inner(t.tau3, PHI) == 0


def test_closed_forms_on_families():
    for s in su3_solutions():
        assert torsion_H(s.algebra) == su3red.H_closed_form(s.algebra), s.key
    alg = family_n3(1).algebra
    assert torsion_H(alg) == su2red.H_closed_form(alg)


def test_codifferential_of_tau1_vanishes_on_nilpotent():
    for entry in catalog():
        assert codifferential_tau1(entry.algebra) == 0
    assert codifferential_tau1(NOTCAL) == 0


def test_no_characteristic_connection():
    bad = [c.algebra for c in catalog() if torsion(c.algebra).tau2]
    assert bad
    with pytest.raises(NoCharacteristicConnection):
        torsion_H(bad[0])


def test_g2t_means_tau2_zero():
    for entry in catalog():
        t = torsion(entry.algebra)
        assert classify(entry.algebra, t).g2t == (not t.tau2)


@settings(max_examples=40, deadline=None)
@given(forms(p=1), forms(p=3))
def test_contract_is_adjoint_to_wedge(a, b):
    for mask in blades_of_degree(7, 2):
        c = Form(7, 2, {mask: 1})
        assert inner(contract(a, b), c) == inner(b, wedge(a, c))


def test_dphi_recombines():
    for entry in catalog():
        t = torsion(entry.algebra)
        assert ce_differential(entry.algebra, PHI) == PSI * t.tau0 + wedge(t.tau1, PHI) * 3 + hodge(t.tau3)
