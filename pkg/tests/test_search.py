from fractions import Fraction

import pytest

from hetg2.parse import ParseError
from hetg2.search import (OPEN_TARGETS, SearchSpec, lambda_candidates, n1_solution_key, nonexistence_report,
                          parse_spec, search_n1, search_n23)
from hetg2.search.n1 import solution_keys

HALF = Fraction(1, 2)


def test_lambda_candidates():
    assert lambda_candidates() == (-1, -HALF, HALF, 1)
    assert 0 in lambda_candidates(include_zero=True)
    assert lambda_candidates(1, (3,)) == tuple(Fraction(p, 3) for p in (-3, -2, -1, 1, 2, 3))


def test_spec_validation():
    for bad in (dict(reduction="n4"), dict(k=0), dict(bound=0), dict(signs="+"),
                dict(eps=(1, 0)), dict(n_prime=1)):
        args = dict(reduction="n1", k=2, bound=1, lambdas=(1,))
        args.update(bad)
        with pytest.raises(ValueError):
            SearchSpec(**args)


def test_parse_spec():
    spec = parse_spec("[search]\nreduction = n1\nk = 2\nsigns = +-\nbound = 3\nlambda = -1/2, 1\n")
    assert spec == SearchSpec("n1", 2, 3, (-HALF, 1), signs="+-")
    spec = parse_spec("[search]\nreduction = n23\nlambda_max = 1\n")
    assert spec.lambdas == (-1, -HALF, HALF, 1)
    with pytest.raises(ParseError):
        parse_spec("[search]\ncolour = red\n")
    with pytest.raises(ParseError):
        parse_spec("[options]\nk = 1\n")


def test_small_n1_search_is_verified_and_deterministic():
    spec = SearchSpec("n1", 1, 2, (0,), eps=(1,), alpha_rank=4, nontrivial=True)
    a, b = search_n1(spec), search_n1(spec)
    assert a.exhaustive and a.solutions
    assert solution_keys(a.solutions) == solution_keys(b.solutions)
    for s in a.solutions[:10]:
        s.check()
        assert s.lam == 0 and s.eps == (1,)
    assert solution_keys(a.solutions[:3]) == [n1_solution_key(s) for s in a.solutions[:3]]


def test_lines():
    r = search_n1(SearchSpec("n1", 1, 1, (1,), signs="-"))
    assert r.lines() == ["SEARCH reduction=n1 k=1 bound=1 lambda={1}",
                         f"SEARCH examined={r.examined} solutions=0 exhaustive=yes"]


def test_budget_marks_result_inexhaustive():
    r = search_n1(SearchSpec("n1", 2, 2, (HALF,), max_seconds=0))
    assert not r.exhaustive


def test_small_n23_search():
    r = search_n23(SearchSpec("n23", 1, 1, (1,), signs="-"))
    assert r.exhaustive and not r.solutions


def test_nonexistence_report_wording():
    rep = nonexistence_report(SearchSpec("n1", 1, 1, (1,), signs="-"))
    lines = rep.lines()
    assert rep.conclusive
    assert lines[0] == "EVIDENCE bounded search, not a proof"
    assert "EVIDENCE no solutions within bounds B=1, lambda in {1}" in lines
    assert any(x.startswith("GATE all eps negative") for x in lines)
    rep = nonexistence_report(SearchSpec("n1", 1, 1, (0,), alpha_rank=2))
    assert any(x.startswith("GATE rank(alpha)=2") for x in rep.lines())


def test_open_targets_are_specs():
    assert OPEN_TARGETS["n63+R (1,1)"].signs == "+-"
    assert OPEN_TARGETS["n52+R2 (1,2)"].signs == "+--"
    with pytest.raises(ValueError):
        search_n23(OPEN_TARGETS["n52+R2 (1,2)"])


@pytest.mark.slow
def test_n23_recovers_the_n3_family():
    from hetg2.search import n23
    from hetg2.solutions import family_n3
    r = search_n23(SearchSpec("n23", 2, 2, (1,)))
    assert r.exhaustive
    known = family_n3(1)
    key = n23.orbit_key(1, n23.gauge_data(known.gauge.forms), known.gauge.eps)
    assert key in {n23.solution_key(s) for s in r.solutions}
    for s in r.solutions[:10]:
        s.check()
