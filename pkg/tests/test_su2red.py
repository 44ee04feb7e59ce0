from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hetg2 import su2red
from hetg2.exterior import Form, e, hodge, wedge
from hetg2.g2 import PHI, torsion_H
from hetg2.nilalg import LieAlgebra, ce_differential, validate
from hetg2.solutions import family_n2, family_n3, lambda0_solutions
from hetg2.su2red import OMEGAS, Z, a_matrix, apply_Ji, components_of, lambda_of, sd_asd, star4

ZERO = Form(7, 2)


def su2(*alphas):
    alphas = list(alphas) + [ZERO] * (3 - len(alphas))
    return LieAlgebra(tuple([ZERO] * 4 + alphas))


def test_phi_in_su2_terms():
    assert PHI == sum((wedge(w, z) for w, z in zip(OMEGAS, Z)), Form(7, 3)) + su2red.Z123


def test_omegas_self_dual():
    for w in OMEGAS:
        assert star4(w) == w


def test_sd_asd():
    plus, minus = sd_asd(e(12))
    assert plus == (e(12) + e(34)) / 2 and minus == (e(12) - e(34)) / 2


def test_complex_structures():
    for i in (1, 2, 3):
        for a in range(1, 5):
            v = Form.basis(7, a)
            assert apply_Ji(i, apply_Ji(i, v)) == -v
    v = Form.basis(7, 1)
    assert apply_Ji(1, apply_Ji(2, v)) == -apply_Ji(2, apply_Ji(1, v))


def test_a_matrix_and_lambda():
    alg = su2(*OMEGAS)
    assert a_matrix(alg) == ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    assert lambda_of(alg) == 1 and su2red.is_g2t(alg)
    asd = su2(e(12) - e(34), e(13) + e(24))
    assert validate(asd).derived_dim == 2
    assert lambda_of(asd) == 0
    skew = su2(e(13) - e(24) + e(12) + e(34), e(14) - e(23))
    assert not su2red.is_g2t(skew)
    with pytest.raises(ValueError):
        su2red.dH_closed_form(skew)


def test_su2_alphas_rejects():
    with pytest.raises(ValueError):
        su2red.su2_alphas(LieAlgebra.from_alphas([e(12)]))


def test_closed_forms_match_direct_computation():
    for s in lambda0_solutions() + [family_n2(1), family_n2(-1), family_n3(1)]:
        H = torsion_H(s.algebra)
        assert H == su2red.H_closed_form(s.algebra), s.key
        assert ce_differential(s.algebra, H) == su2red.dH_closed_form(s.algebra), s.key


small = st.integers(-2, 2)


@settings(max_examples=50, deadline=None)
@given(st.lists(small, min_size=21, max_size=21))
def test_components_round_trip(cs):
    from itertools import combinations
    masks = [(1 << i) | (1 << j) for i, j in combinations(range(7), 2)]
    F = Form(7, 2, dict(zip(masks, cs)))
    assert components_of(F).compose() == F


def test_instanton_normal_form_on_solutions():
    for s in lambda0_solutions() + [family_n3(1)]:
        for f in s.gauge.forms:
            c = su2red.instanton_normal_form(s.algebra, f)
            assert c.compose() == f
            assert star4(c.F0) == -c.F0


def test_instanton_normal_form_errors():
    alg = su2(*OMEGAS)
    with pytest.raises(su2red.InstantonError):
        su2red.instanton_normal_form(alg, wedge(Z[1], Z[2]))
    with pytest.raises(su2red.InstantonError):
        su2red.instanton_normal_form(alg, e(12) + e(34))


def test_system_check_on_solutions():
    for s in lambda0_solutions() + [family_n2(1), family_n3(1)]:
        comps = [components_of(f) for f in s.gauge.forms]
        rep = su2red.system_check(s.algebra, comps, s.gauge.eps, s.lam)
        assert rep.passed, (s.key, rep.items)
        bad = su2red.system_check(s.algebra, comps, [2 * x for x in s.gauge.eps], s.lam)
        assert not bad.passed, s.key


def test_assemble_round_trip():
    s = family_n3(1)
    comps = [components_of(f) for f in s.gauge.forms]
    alg, g = su2red.assemble(list(s.algebra.structure[4:]), comps, s.gauge.eps)
    assert alg.structure == s.algebra.structure and g == s.gauge
    assert su2red.calibration_check(alg)
