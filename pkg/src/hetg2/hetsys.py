"""Checks for the invariant heterotic G2-system with a torus gauge group.

Unknowns are the curvature 2-forms F^r with nonzero pairing constants eps_r;
the equations are tau2 = 0, dF^r = 0, F^r ^ psi = 0 and the Bianchi identity
dH = sum_r eps_r F^r ^ F^r.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import Form, norm2, render, wedge
from .g2 import PSI, codifferential_tau1, torsion, torsion_H
from .nilalg import ce_differential, scalar_curvature


@dataclass(frozen=True)
class GaugeField:
    forms: tuple = ()
    eps: tuple = ()

    def __post_init__(self):
        forms = tuple(self.forms)
        eps = tuple(Fraction(x) for x in self.eps)
        if len(forms) != len(eps):
            raise ValueError(f"{len(forms)} curvature forms but {len(eps)} pairing constants")
        if any(x == 0 for x in eps):
            raise ValueError("pairing constants eps_r must be nonzero")
        for f in forms:
            if f.n != 7 or (f.p != 2 and f):
                raise ValueError("curvature forms must be 2-forms on R^7")
        forms = tuple(f if f.p == 2 else Form(7, 2) for f in forms)
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "eps", eps)

    @property
    def k(self):
        return len(self.forms)

    def pairs(self):
        return zip(self.forms, self.eps)

    def trace_square(self):
        """sum_r eps_r F^r ^ F^r."""
        out = Form(7, 4)
        for f, x in self.pairs():
            out = out + wedge(f, f) * x
        return out

    def norm2(self):
        return sum((x * norm2(f) for f, x in self.pairs()), Fraction(0))


@dataclass(frozen=True)
class Check:
    name: str
    passed: object  # True, False or None for "not applicable"
    residual: object = None

    def line(self):
        status = "N/A" if self.passed is None else ("PASS" if self.passed else "FAIL")
        out = f"CHECK {self.name} {status}"
        if self.passed is False and self.residual is not None:
            res = render(self.residual) if isinstance(self.residual, Form) else str(self.residual)
            out += f" residual={res}"
        return out


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    lam: Fraction
    signature: tuple
    scal_residual: object
    tau1_zero: bool
    notes: tuple = field(default=())

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self):
        return [c.line() for c in self.checks]


def signature(g):
    pos = sum(1 for x in g.eps if x > 0)
    return pos, len(g.eps) - pos


def verify(alg, g):
    t = torsion(alg)
    checks = [Check("tau2", not t.tau2, t.tau2 or None)]
    for r, f in enumerate(g.forms, 1):
        df = ce_differential(alg, f)
        checks.append(Check(f"closed{r}", not df, df or None))
    for r, f in enumerate(g.forms, 1):
        res = wedge(f, PSI)
        checks.append(Check(f"instanton{r}", not res, res or None))
    scal_res = None
    notes = []
    if t.tau2:
        checks.append(Check("bianchi", None))
        notes.append("tau2 != 0: Bianchi identity not applicable")
    else:
        H = torsion_H(alg, t)
        res = ce_differential(alg, H) - g.trace_square()
        checks.append(Check("bianchi", not res, res or None))
        scal_res = _scal_residual(alg, g, t, H)
    return VerificationReport(tuple(checks), t.lam, signature(g), scal_res, not t.tau1, tuple(notes))


def _scal_residual(alg, g, t, H):
    return (scalar_curvature(alg) - norm2(H) / 2 + g.norm2()
            - 8 * codifferential_tau1(alg, t) - 16 * norm2(t.tau1) - 4 * t.lam ** 2)


def scal_identity_check(alg, g):
    """Residual of Scal - |H|^2/2 + sum eps|F|^2 - 8 delta tau1 - 16|tau1|^2 - 4 lambda^2."""
    t = torsion(alg)
    H = torsion_H(alg, t)
    return _scal_residual(alg, g, t, H)


def integrality_check(g, alg=None):
    return all(f.is_integral() for f in g.forms)
