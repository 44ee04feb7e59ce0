"""Explicit integral solutions of the heterotic G2-system, as data.

Each entry records the algebra, the gauge field and the expected lambda and
signature, so callers can feed them straight into verify().
"""

from dataclasses import dataclass
from fractions import Fraction

from .exterior import Form
from .hetsys import GaugeField
from .nilalg import LieAlgebra
from .parse import parse_form


@dataclass(frozen=True)
class KnownSolution:
    key: str
    algebra: LieAlgebra
    gauge: GaugeField
    lam: Fraction
    signature: tuple
    label: str


def _f(text):
    return parse_form(text)


def _n1(key, alpha, sigmas, eps, lam, label):
    alg = LieAlgebra.from_alphas([_f(alpha)], name=label)
    g = GaugeField(tuple(_f(s) for s in sigmas), tuple(Fraction(x) for x in eps))
    pos = sum(1 for x in g.eps if x > 0)
    return KnownSolution(key, alg, g, Fraction(lam), (pos, len(eps) - pos), label)


def su3_solutions():
    """Derived dimension one: one center direction z = e7."""
    return [
        _n1("h5_lambda0", "5e12-5e34", ["-4e13+3e14-3e23-4e24"], [1], 0, "h5+R2"),
        _n1("h7_lambda0_sig21", "e12-2e34+e56", ["e12-e34", "e12-2e34+e56", "e12-e34"],
            [1, 1, -1], 0, "h7"),
        _n1("h3_lambda_half", "3e56", ["e12-e56", "e34-e56"], [3, 3], Fraction(1, 2), "h3+R4"),
        _n1("h5_lambda_half", "e34+2e56", ["-e12+2e34-e56", "e12-e56"],
            [Fraction(1, 2), Fraction(5, 2)], Fraction(1, 2), "h5+R2"),
        _n1("h7_lambda_half", "e12+e34+e56", ["-2e12+e34+e56", "e34-e56"],
            [Fraction(1, 2), Fraction(3, 2)], Fraction(1, 2), "h7"),
    ]


ASD_BASIS = ("e12-e34", "e13+e24", "e14-e23")

# alpha triples (alpha_3 = 0 for derived dimension two) of the lambda = 0 family
LAMBDA0_ALPHAS = [
    ("n52+R2", ("e13", "e23", "0")),
    ("h3+h3+R", ("e13+e14", "e14+e24", "0")),
    ("h3C+R", ("e13-e24", "e14+e23", "0")),
    ("n62+R", ("2e13", "e14+e23", "0")),
    ("n63+R", ("e13", "2e23", "e12")),
    ("n73A", ("e24", "e23", "2e12")),
    ("n73B", ("e12+e13", "2e14", "-e24+e34")),
    ("n73B1", ("-e14", "2e13+e24", "e12-e34")),
    ("n73C", ("e24", "e23", "e12+e34")),
    ("n73D", ("e12+e14+e34", "-e13", "-2e24")),
    ("n73D1", ("e12-e34", "e13+e24", "e14-e23")),
]


# As printed, these two triples are not solutions: the first has trace
# a11 + a22 = 2 (so lambda = 1/3), the second has a13 != a31 (tau2 != 0).
# The list above uses the nearest corrected triples with the same
# fingerprint.
UNCORRECTED_LAMBDA0_ALPHAS = [
    ("h3+h3+R", ("e13+e14", "-e23+e24", "0")),
    ("n73D", ("e12+e14+e34", "-e13", "2e24")),
]


def _asd_with_norm(target):
    """Smallest integral anti-self-dual a(e12-e34)+b(e13+e24)+c(e14-e23) with
    |.|^2 = target, preferring lexicographically largest (a, b, c)."""
    half = Fraction(target, 2)
    if half.denominator != 1:
        raise ValueError(f"no integral anti-self-dual form of norm^2 {target}")
    half = int(half)
    bound = int(half ** 0.5) + 1
    for a in range(bound, -1, -1):
        for b in range(bound, -1, -1):
            for c in range(bound, -1, -1):
                if a * a + b * b + c * c == half:
                    out = Form(7, 2)
                    for k, basis in zip((a, b, c), ASD_BASIS):
                        out = out + _f(basis) * k
                    return out
    raise ValueError(f"no integral anti-self-dual form of norm^2 {target}")


def _su2_algebra(alphas, label):
    forms = [Form(7, 2) if a == "0" else _f(a) for a in alphas]
    return LieAlgebra(tuple([Form(7, 2)] * 4 + forms), name=label)


def lambda0_solutions():
    from .exterior import norm2
    out = []
    for label, alphas in LAMBDA0_ALPHAS:
        alg = _su2_algebra(alphas, label)
        total = sum(norm2(a) for a in alg.structure)
        F0 = _asd_with_norm(total)
        out.append(KnownSolution(f"lambda0_{label}", alg, GaugeField((F0,), (Fraction(1),)),
                                 Fraction(0), (1, 0), label))
    return out


def family_n2(lam):
    """Derived dimension two, three gauge forms, integral for integer lambda."""
    lam = Fraction(lam)
    alg = LieAlgebra(tuple([Form(7, 2)] * 4 + [_f("e13"), _f("e14") * (1 - 6 * lam), Form(7, 2)]),
                     name="n62+R")
    eps = (12 * lam ** 2 - 2 * lam, 2 * lam, 12 * lam ** 2 - 6 * lam + 1)
    g = GaugeField((_f("e15+e47"), _f("e16+e37"), _f("e13+e24")), eps)
    pos = sum(1 for x in eps if x > 0)
    return KnownSolution(f"n2_family_{lam}", alg, g, lam, (pos, 3 - pos), "n62+R")


def family_n3(lam):
    """Derived dimension three, two gauge forms."""
    lam = Fraction(lam)
    alg = LieAlgebra(tuple([Form(7, 2)] * 4 + [_f("e24") * (-2 * lam), _f("e14") * (-2 * lam),
                                                _f("e12") * (2 * lam)]), name="n63+R")
    g = GaugeField((_f("2e15+e26+e47"), _f("2e46+2e27")), (2 * lam ** 2, Fraction(3, 2) * lam ** 2))
    return KnownSolution(f"n3_family_{lam}", alg, g, lam, (2, 0), "n63+R")


def all_solutions():
    return (su3_solutions() + lambda0_solutions()
            + [family_n2(1), family_n2(-1), family_n3(1)])
