"""Bounded nonexistence statements built on the searches."""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import hermitian as hm
from .n1 import search_n1
from .n23 import search_n23
from .spec import SearchSpec

ID9 = np.array([1, 1, 1, 0, 0, 0, 0, 0, 0], dtype=np.int64)


@dataclass
class NonexistenceReport:
    """Outcome of a bounded search read as evidence.  An empty exhaustive
    result says nothing beyond the box that was searched."""

    spec: SearchSpec
    result: object
    gates: list = field(default_factory=list)

    @property
    def empty(self):
        return not self.result.solutions

    @property
    def conclusive(self):
        return self.empty and self.result.exhaustive

    def statement(self):
        s = self.spec
        lams = ", ".join(str(x) for x in s.lambdas)
        if self.result.solutions:
            return f"{len(self.result.solutions)} solutions within bounds B={s.bound}, lambda in {{{lams}}}"
        if not self.result.exhaustive:
            return f"inconclusive: budget exhausted before covering B={s.bound}, lambda in {{{lams}}}"
        return f"no solutions within bounds B={s.bound}, lambda in {{{lams}}}"

    def lines(self):
        s = self.spec
        out = ["EVIDENCE bounded search, not a proof",
               f"EVIDENCE reduction={s.reduction} k={s.k} signs={s.signs or 'any'} target={s.target or 'any'}",
               f"EVIDENCE {self.statement()}"]
        out += [f"GATE {g}" for g in self.gates]
        out += self.result.lines()
        return out


def _rank2_gate(spec):
    """At lambda = 0 a rank-2 alpha has alpha^alpha = 0, which the norm identity
    for the gauge forms forbids.  Count the box candidates it rules out."""
    reps = hm.representatives(spec.bound)
    hits = 0
    for h in (reps, -reps):
        hits += int((hm.rank(h) == 1).sum())
    return (f"rank(alpha)=2 at lambda=0: {hits} box candidates reach the alpha^alpha != 0 gate, "
            "and rank 2 forces alpha^alpha = 0, so none pass")


def nonexistence_report(spec):
    gates = []
    if spec.reduction == "n1":
        if spec.alpha_rank == 2 and Fraction(0) in spec.lambdas:
            gates.append(_rank2_gate(spec))
        result = search_n1(spec)
    else:
        result = search_n23(spec)
    if spec.signs is not None and "+" not in spec.signs:
        gates.append("all eps negative: the trace identity has a positive left-hand side")
    return NonexistenceReport(spec, result, gates)


# signature questions left open; exposed as ready-made specs, no outcome asserted.
# The (1,2) target needs three gauge forms, which search_n23 does not handle yet.
OPEN_TARGETS = {
    "n63+R (1,1)": SearchSpec("n23", 2, 2, (Fraction(1, 2), Fraction(1)), signs="+-", target="n63+R"),
    "n52+R2 (1,2)": SearchSpec("n23", 3, 2, (Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1)),
                               signs="+--", n_prime=2, target="n52+R2"),
}
