"""Acceptance criteria, one test each.  A summary line per criterion is
printed at the end of the pytest run (see conftest.py)."""

import random
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from acceptance_log import record
from hetg2 import bundle, su2red, su3red
from hetg2.exterior import Form, hodge, norm2
from hetg2.g2 import classify, standard_phi, standard_psi, torsion, torsion_H
from hetg2.hetsys import GaugeField, scal_identity_check, verify
from hetg2.nilalg import catalog, ce_differential, fingerprint, scalar_curvature, validate
from hetg2.parse import parse_algebra, parse_form, parse_problem, render_problem, render_tuple
from hetg2.search import SearchSpec, search_n1, search_n23
from hetg2.search.n1 import orbit_key, solution_keys
from hetg2.solutions import all_solutions, family_n2, family_n3, lambda0_solutions, su3_solutions

DATA = Path(__file__).resolve().parents[1] / "src" / "hetg2" / "data"
HALF = Fraction(1, 2)
NONZERO_LAMBDAS = (-1, -HALF, HALF, 1)


@contextmanager
def criterion(key, title):
    try:
        yield
    except BaseException as exc:
        if isinstance(exc, pytest.skip.Exception):
            record(key, title, False, "skipped")
        else:
            record(key, title, False, type(exc).__name__)
        raise
    record(key, title, True)


def test_1_hodge_consistency():
    with criterion("1", "hodge(phi) = psi term for term"):
        phi, psi = standard_phi(), standard_psi()
        assert len(phi) == 7 and len(psi) == 7
        assert sorted(hodge(phi).terms) == sorted(psi.terms)


def test_2_catalog():
    with criterion("2", "catalog algebras validate, fingerprints distinct"):
        entries = catalog()
        assert len(entries) >= 13
        for e in entries:
            diag = validate(e.algebra)
            assert diag.ok, (e.name, diag.messages)
            assert diag.derived_dim == e.derived_dim
        prints = [fingerprint(e.algebra) for e in entries]
        for (a, fa), (b, fb) in combinations(zip(entries, prints), 2):
            assert fa != fb, (a.name, b.name)


def test_3_torsion_vectors():
    with criterion("3", "torsion of the non-calibrating example and of h7"):
        notcal = parse_algebra("(0,0,0,e13,0,e15,-e35)", strict=False)
        t = torsion(notcal)
        assert not t.tau2
        assert t.tau1 == parse_form("1/4 e2")
        assert not classify(notcal, t).coclosed
        h7 = parse_algebra("(0,0,0,0,0,0,e12+e34+e56)")
        t = torsion(h7)
        assert not t.tau1 and not t.tau2
        assert t.lam == HALF


def test_4_g2t_implies_coclosed():
    with criterion("4", "g2t implies coclosed on every catalog entry"):
        for e in catalog():
            c = classify(e.algebra)
            assert not c.g2t or c.coclosed, e.name


def _criterion5_set():
    return su3_solutions() + lambda0_solutions() + [family_n2(1), family_n2(-1), family_n3(1)]


EXPECTED_SIGNATURES = {"h7_lambda0_sig21": (2, 1), "n2_family_1": (3, 0), "n2_family_-1": (2, 1)}


def test_5_known_solutions():
    with criterion("5", "known solutions verify with the stated lambda and signature"):
        sols = _criterion5_set()
        assert len(sols) == 5 + 11 + 3
        for s in sols:
            rep = verify(s.algebra, s.gauge)
            assert rep.passed, (s.key, rep.lines())
            assert rep.scal_residual == 0, s.key
            assert rep.lam == s.lam, s.key
            assert rep.signature == s.signature, s.key
            if s.key in EXPECTED_SIGNATURES:
                assert rep.signature == EXPECTED_SIGNATURES[s.key]


def test_6_scalar_curvature_identity():
    with criterion("6", "scalar curvature identity vanishes exactly"):
        for s in _criterion5_set():
            assert scal_identity_check(s.algebra, s.gauge) == 0, s.key
        for e in catalog():
            alphas = e.algebra.alphas
            assert scalar_curvature(e.algebra) == -sum(norm2(a) for a in alphas) / 2, e.name


def test_7_dH_closed_forms():
    with criterion("7", "d(H) matches the closed forms where tau2 = 0"):
        seen = 0
        algs = [e.algebra for e in catalog()] + [s.algebra for s in _criterion5_set()]
        for alg in algs:
            if torsion(alg).tau2:
                continue
            dH = ce_differential(alg, torsion_H(alg))
            if validate(alg).derived_dim == 1:
                assert dH == su3red.dH_closed_form(alg)
            else:
                assert dH == su2red.dH_closed_form(alg)
            seen += 1
        assert seen >= 5


def _random_components(rng, B=2):
    a, b, c = (rng.randint(-B, B) for _ in range(3))
    F0 = parse_form("e12-e34") * a + parse_form("e13+e24") * b + parse_form("e14-e23") * c
    if rng.random() < 0.5:
        v1 = v2 = Form(7, 1)
    else:
        v1 = Form(7, 1, {1 << i: Fraction(rng.randint(-1, 1)) for i in range(4)})
        v2 = Form(7, 1, {1 << i: Fraction(rng.randint(-1, 1)) for i in range(4)})
    v3 = su2red.apply_Ji(1, v2) - su2red.apply_Ji(2, v1)
    return su2red.Components(F0, (v1, v2, v3), (0, 0, 0))


def _su2_entries():
    out = [(s.key, s.algebra) for s in lambda0_solutions()]
    out += [(s.key, s.algebra) for s in (family_n2(1), family_n3(1))]
    for e in catalog():
        try:
            su2red.su2_alphas(e.algebra)
        except ValueError:
            continue
        out.append((e.name, e.algebra))
    return out


def test_8_system_check_matches_verify():
    with criterion("8", "system_check verdict equals verify verdict"):
        rng = random.Random(8)
        agree = passes = 0
        for name, alg in _su2_entries():
            lam = su2red.lambda_of(alg)
            for _ in range(50):
                k = rng.choice((1, 1, 2))
                comps = [_random_components(rng) for _ in range(k)]
                if any(not c.compose() for c in comps):
                    continue
                eps = [Fraction(rng.choice((1, 2, 3, -1))) * rng.choice((1, HALF)) for _ in range(k)]
                if rng.random() < 0.3:
                    # aim at the norm identity so that some candidates pass
                    target = sum(norm2(a) for a in alg.alphas) - 12 * lam * lam
                    n = norm2(comps[0].F0)
                    if k == 1 and n and target:
                        eps = [target / n]
                g = GaugeField(tuple(c.compose() for c in comps), tuple(eps))
                sc = su2red.system_check(alg, comps, eps, lam).passed
                assert sc == verify(alg, g).passed, (name, [str(c.compose()) for c in comps], eps)
                agree += 1
                passes += sc
        assert agree >= 500
        assert passes > 0


def test_9_nonexistence_fast():
    with criterion("9.1", "no solutions in the k=1 and all-negative scans (B=2)"):
        lams = NONZERO_LAMBDAS
        for signs in ("+", "-"):
            r = search_n1(SearchSpec("n1", 1, 2, lams, signs=signs))
            assert r.exhaustive and not r.solutions, signs
        r = search_n1(SearchSpec("n1", 2, 2, lams, signs="--"))
        assert r.exhaustive and not r.solutions
        r = search_n23(SearchSpec("n23", 1, 2, lams, n_prime=2))
        assert r.exhaustive and not r.solutions
        r = search_n23(SearchSpec("n23", 1, 2, lams, signs="-"))
        assert r.exhaustive and not r.solutions


@pytest.mark.slow
def test_9_nonexistence_k2():
    with criterion("9.2", "no n'=1 (+,-), n'=2 or n73A solutions with k=2 (B=2)"):
        lams = NONZERO_LAMBDAS
        r = search_n1(SearchSpec("n1", 2, 2, lams, signs="+-"))
        assert r.exhaustive and not r.solutions
        r = search_n23(SearchSpec("n23", 2, 2, lams))
        assert r.exhaustive
        names = {fingerprint(e.algebra): e.name for e in catalog()}
        for s in r.solutions:
            assert validate(s.algebra).derived_dim != 2
            assert names.get(fingerprint(s.algebra)) != "n73A"
            assert any(x > 0 for x in s.eps)


def _known_key(s):
    alpha0 = su3red.to6(s.algebra.structure[6]) - su3red.OMEGA * (2 * s.lam)
    return orbit_key(s.lam, alpha0, [su3red.to6(f) for f in s.gauge.forms], s.gauge.eps)


def test_10_search_recovery():
    with criterion("10", "searches recover the known solutions, deterministic order"):
        known = {s.key: s for s in su3_solutions()}
        spec = SearchSpec("n1", 1, 5, (0,), eps=(1,), alpha_rank=4, nontrivial=True)
        r = search_n1(spec)
        assert r.exhaustive
        assert _known_key(known["h5_lambda0"]) in set(solution_keys(r.solutions))
        spec = SearchSpec("n1", 2, 2, (HALF,), signs="++")
        r = search_n1(spec)
        keys = set(solution_keys(r.solutions))
        for name in ("h3_lambda_half", "h5_lambda_half", "h7_lambda_half"):
            assert _known_key(known[name]) in keys, name
        small = SearchSpec("n1", 1, 3, (0,), eps=(1,), alpha_rank=4, nontrivial=True)
        a, b = search_n1(small), search_n1(small)
        assert solution_keys(a.solutions) == solution_keys(b.solutions)
        for s in r.solutions[:25]:
            s.check()


def test_11_bundle_integrality():
    with criterion("11", "bundle cocycles integral; closed form matches the oracle"):
        for s in _criterion5_set():
            gens = bundle.lattice_generators(s.algebra)
            for f in s.gauge.forms:
                sg = bundle.split_gauge(s.algebra, f)
                rep = bundle.integrality_scan(sg, gens, s.algebra)
                assert rep.passed, (s.key, rep.lines())
        rng = random.Random(11)
        sols = _criterion5_set()
        for _ in range(20):
            s = rng.choice(sols)
            f = rng.choice(s.gauge.forms)
            sg = bundle.split_gauge(s.algebra, f)
            C1 = bundle.LatticeVector(*_random_lattice(rng, s.algebra))
            C2 = bundle.LatticeVector(*_random_lattice(rng, s.algebra))
            assert bundle.cocycle_c(sg, C1, C2) == bundle.oracle_cocycle(s.algebra, sg, C1, C2)


def _random_lattice(rng, alg):
    b = 7 - len(alg.center_indices)
    return (tuple(rng.randint(-2, 2) for _ in range(b)), tuple(rng.randint(-2, 2) for _ in range(7 - b)))


def test_12_parser_round_trip():
    with criterion("12", "render(parse(x)) = x on the golden corpus"):
        lines = (DATA / "algebras.txt").read_text().splitlines()
        assert len(lines) == len(catalog())
        for line in lines:
            _, text = line.split(" ", 1)
            assert render_tuple(parse_algebra(text)) == text
        files = sorted((DATA / "problems").glob("*.txt"))
        assert len(files) == len(all_solutions())
        for path in files:
            text = path.read_text()
            assert render_problem(parse_problem(text)) == text, path.name


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
