"""Search specifications and results."""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..parse import ParseError, _key_values, _sections, parse_algebra, parse_rational, parse_rational_list, render_problem, problem_from_data


def lambda_candidates(max_abs=1, denominators=(1, 2), include_zero=False):
    """Rationals p/q with q in denominators and 0 < |p/q| <= max_abs, sorted."""
    vals = set()
    for q in denominators:
        for p in range(-int(max_abs * q), int(max_abs * q) + 1):
            x = Fraction(p, q)
            if abs(x) <= max_abs and (x or include_zero):
                vals.add(x)
    return tuple(sorted(vals))


@dataclass(frozen=True)
class SearchSpec:
    reduction: str
    k: int
    bound: int
    lambdas: tuple
    signs: str = None
    eps: tuple = None
    n_prime: int = None
    target: str = None
    alpha_rank: int = None
    nontrivial: bool = False
    algebra: object = None
    max_seconds: float = None
    max_solutions: int = None

    def __post_init__(self):
        if self.reduction not in ("n1", "n23"):
            raise ValueError("reduction must be 'n1' or 'n23'")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")
        object.__setattr__(self, "lambdas", tuple(Fraction(x) for x in self.lambdas))
        if self.signs is not None:
            if len(self.signs) != self.k or set(self.signs) - {"+", "-"}:
                raise ValueError("signs must be a string of k characters '+' or '-'")
        if self.eps is not None:
            eps = tuple(Fraction(x) for x in self.eps)
            if len(eps) != self.k or any(x == 0 for x in eps):
                raise ValueError("fixed eps needs k nonzero values")
            object.__setattr__(self, "eps", eps)
        if self.n_prime not in (None, 2, 3):
            raise ValueError("n_prime must be 2 or 3")

    def sign_ok(self, eps):
        if self.signs is None:
            return True
        return all((x > 0) == (s == "+") for x, s in zip(eps, self.signs))


@dataclass
class Solution:
    """A search hit.  The search itself checks the reduced equation exactly;
    the full heterotic verification runs on first access to report."""

    lam: Fraction
    algebra: object
    gauge: object
    data: dict = field(default_factory=dict)

    @property
    def eps(self):
        return self.gauge.eps

    @cached_property
    def report(self):
        from ..hetsys import verify
        return verify(self.algebra, self.gauge)

    @property
    def scal_residual(self):
        return self.report.scal_residual

    def check(self):
        rep = self.report
        if not rep.passed or rep.scal_residual != 0:
            raise AssertionError(f"search produced an unverified solution: {rep.lines()}")
        return rep

    def problem_text(self):
        opts = {"lambda": str(self.lam)}
        return render_problem(problem_from_data(self.algebra, self.gauge.forms, self.gauge.eps, opts))


@dataclass
class SearchResult:
    spec: SearchSpec
    solutions: list
    examined: int
    seconds: float
    exhaustive: bool
    notes: list = field(default_factory=list)

    def lines(self):
        s = self.spec
        lam = ", ".join(str(x) for x in s.lambdas)
        out = [f"SEARCH reduction={s.reduction} k={s.k} bound={s.bound} lambda={{{lam}}}",
               f"SEARCH examined={self.examined} solutions={len(self.solutions)} "
               f"exhaustive={'yes' if self.exhaustive else 'no'}"]
        for n in self.notes:
            out.append(f"NOTE {n}")
        return out


class Budget:
    def __init__(self, seconds):
        self.start = time.monotonic()
        self.seconds = seconds
        self.exceeded = False

    def over(self):
        if self.seconds is not None and time.monotonic() - self.start > self.seconds:
            self.exceeded = True
        return self.exceeded

    def elapsed(self):
        return time.monotonic() - self.start


_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def parse_spec(text):
    """A [search] section of key = value lines, optionally with an [algebra]."""
    secs = _sections(text)
    if "search" not in secs:
        raise ParseError("missing [search] section")
    kv = _key_values(secs["search"])
    known = {"reduction", "k", "signs", "bound", "lambda", "lambda_max", "lambda_denominators",
             "eps", "n_prime", "target", "alpha_rank", "nontrivial", "max_seconds", "max_solutions"}
    unknown = set(kv) - known
    if unknown:
        raise ParseError(f"unknown search keys: {', '.join(sorted(unknown))}")
    try:
        k = int(kv.get("k", "1"))
        bound = int(kv.get("bound", "2"))
    except ValueError:
        raise ParseError("k and bound must be integers") from None
    if "lambda" in kv:
        lambdas = tuple(parse_rational_list(kv["lambda"]))
    else:
        dens = tuple(int(x) for x in kv.get("lambda_denominators", "1,2").split(","))
        lambdas = lambda_candidates(parse_rational(kv.get("lambda_max", "1")), dens)
    eps = kv.get("eps", "solve").strip()
    eps = None if eps == "solve" else tuple(parse_rational_list(eps))
    signs = kv.get("signs") or None
    alg = None
    if "algebra" in secs:
        alg = parse_algebra("\n".join(line for _, line in secs["algebra"]))
    try:
        return SearchSpec(
            reduction=kv.get("reduction", "n1"), k=k, bound=bound, lambdas=lambdas, signs=signs, eps=eps,
            n_prime=int(kv["n_prime"]) if "n_prime" in kv else None,
            target=kv.get("target") or None,
            alpha_rank=int(kv["alpha_rank"]) if "alpha_rank" in kv else None,
            nontrivial=_BOOL.get(kv.get("nontrivial", "false").lower(), False),
            algebra=alg,
            max_seconds=float(kv["max_seconds"]) if "max_seconds" in kv else None,
            max_solutions=int(kv["max_solutions"]) if "max_solutions" in kv else None,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None
