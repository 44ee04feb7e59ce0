from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from hetg2.exterior import Form, norm2, wedge
from hetg2.nilalg import (LieAlgebra, abelian, catalog, catalog_entry, ce_differential, fingerprint, form_rank,
                          salamon, scalar_curvature, validate)
from hetg2.parse import AlgebraError, parse_algebra, parse_form
from test_exterior import forms

CATALOG = catalog()
ALGEBRAS = [c.algebra for c in CATALOG]


def test_catalog_counts():
    dims = [c.derived_dim for c in CATALOG]
    assert dims.count(1) == 3 and dims.count(2) == 6 and dims.count(3) == 7


def test_catalog_lookup():
    assert salamon(catalog_entry("h7").algebra) == "(0,0,0,0,0,0,e12+e34+e56)"
    with pytest.raises(KeyError):
        catalog_entry("n99")


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ALGEBRAS), forms())
def test_d_squared_zero(alg, a):
    assert not ce_differential(alg, ce_differential(alg, a))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ALGEBRAS), forms(), forms())
def test_leibniz(alg, a, b):
    d = lambda x: ce_differential(alg, x)
    sign = -1 if a.p % 2 else 1
    assert d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)) * sign


def test_differential_on_basis():
    h3 = catalog_entry("h3+R4").algebra
    assert ce_differential(h3, Form.basis(7, 7)) == parse_form("e12")
    assert ce_differential(h3, parse_form("e37")) == parse_form("-e123")


def test_bracket_convention():
    h3 = catalog_entry("h3+R4").algebra
    # de7(e1, e2) = 1 and de(X, Y) = -e([X, Y])
    assert h3.bracket(1, 2) == {7: Fraction(-1)}
    assert h3.bracket(2, 1) == {7: Fraction(1)}
    assert h3.structure_constant(1, 2, 7) == -1


def test_validate_flags_jacobi_violation():
    alg = LieAlgebra((parse_form("e34"),) + (Form(7, 2),) * 5 + (parse_form("e12"),))
    diag = validate(alg)
    assert not diag.d_squared_zero and not diag.ok
    with pytest.raises(AlgebraError):
        parse_algebra("(e34,0,0,0,0,0,e12)", strict=False)


def test_validate_dependent_and_abelian():
    alg = LieAlgebra((Form(7, 2),) * 5 + (parse_form("e12"), parse_form("2e12")))
    assert not validate(alg).independent
    assert validate(abelian()).abelian


def test_normal_form_required_in_strict_mode():
    with pytest.raises(AlgebraError, match="not normal form"):
        parse_algebra("(0,0,0,e13,0,e15,-e35)")
    assert parse_algebra("(0,0,0,e13,0,e15,-e35)", strict=False).derived_dim == 3


def test_form_rank():
    assert form_rank(parse_form("e12")) == 2
    assert form_rank(parse_form("e12+e34")) == 4
    assert form_rank(parse_form("e12+e34+e56")) == 6
    assert form_rank(parse_form("e12+e13")) == 2


def test_fingerprints_separate_catalog():
    prints = {fingerprint(a) for a in ALGEBRAS}
    assert len(prints) == len(ALGEBRAS)


def test_fingerprint_invariant_under_basis_change():
    # h3 + h3 + R written with a swapped pair of coordinates
    a = parse_algebra("(0,0,0,0,e12,e34,0)")
    b = parse_algebra("(0,0,0,0,e34,-e12,0)")
    assert fingerprint(a) == fingerprint(b)


@pytest.mark.parametrize("entry", CATALOG, ids=lambda c: c.name)
def test_scalar_curvature_matches_koszul_oracle(entry):
    alg = entry.algebra
    assert scalar_curvature(alg) == oracle.scalar_curvature(alg.structure)
    assert scalar_curvature(alg) == -sum(norm2(a) for a in alg.alphas) / 2
