"""Derived dimension one: the SU(3)-structure picture.

With z = e7 the standard phi splits as omega ^ z + Omega_+, and a G2T
algebra has dz = 2 lambda omega + alpha_0 with alpha_0 primitive of type
(1,1).  Primitive (1,1)-forms correspond to trace-free symmetric
endomorphisms L commuting with J through sigma(X, Y) = <L J X, Y>.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exterior import Form, apply_J, hodge, inner, lefschetz_dual, norm2, wedge
from .hetsys import GaugeField, verify
from .linalg import identity, matmul
from .nilalg import LieAlgebra, ce_differential, form_rank
from .g2 import PSI

OMEGA = Form(6, 2, {0b11: 1, 0b1100: 1, 0b110000: 1})


def _f6(text):
    from .parse import parse_form
    return parse_form(text, n=6)


OMEGA_PLUS = _f6("e135-e146-e236-e245")
OMEGA_MINUS = hodge(OMEGA_PLUS)
Z = Form.basis(7, 7)

PRIMITIVE_11_BASIS = tuple(_f6(t) for t in (
    "e12-e34", "e34-e56", "e13+e24", "e14-e23", "e15+e26", "e16-e25", "e35+e46", "e36-e45"))


class InstantonError(ValueError):
    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


def to6(a):
    """View a form on R^7 that does not involve e7 as a form on R^6."""
    if a.n == 6:
        return a
    if a.support() & (1 << 6):
        raise ValueError("form involves the center direction e7")
    return a.restrict(6)


def to7(a):
    return a.embed(7) if a.n == 6 else a


def split_z(F):
    """F = F_v + eta ^ e7 on R^7, returned as (F_v, eta) on R^6."""
    top = 1 << 6
    fv = {m: c for m, c in F.terms if not m & top}
    eta = {}
    for m, c in F.terms:
        if m & top:
            # e^{i7} = e^i ^ e^7
            eta[m ^ top] = c
    return Form(6, F.p, fv), Form(6, F.p - 1, eta)


@dataclass(frozen=True)
class TypeDecomp2:
    b: Fraction
    beta: Form
    sigma: Form


def decompose2(a):
    """a = b omega + beta + sigma with beta J-anti-invariant and sigma primitive (1,1)."""
    a = to6(a)
    if a.p != 2:
        raise ValueError("decompose2 expects a 2-form")
    b = inner(a, OMEGA) / 3
    rest = a - OMEGA * b
    Jr = apply_J(rest)
    beta = (rest - Jr) / 2
    sigma = (rest + Jr) / 2
    return TypeDecomp2(b, beta, sigma)


def is_primitive_11(s):
    s = to6(s)
    d = decompose2(s)
    return not d.b and not d.beta


def J_form(eta):
    """(J eta)(X) = -eta(J X) on 1-forms."""
    return apply_J(to6(eta))


def star_eta_omega(eta):
    """*_6(eta ^ Omega_+), a 2-form of type (2,0)+(0,2)."""
    return hodge(wedge(to6(eta), OMEGA_PLUS))


@dataclass(frozen=True)
class IdentityReport:
    items: tuple

    @property
    def passed(self):
        return all(ok for _, ok in self.items)


def su3_identities_check():
    items = []
    vol_scalar = lambda f: hodge(f).scalar_value()
    for k, s in enumerate(PRIMITIVE_11_BASIS):
        items.append((f"|sigma|^2 basis{k}", vol_scalar(wedge(wedge(s, s), OMEGA)) == -norm2(s)))
    for k, s in enumerate(PRIMITIVE_11_BASIS):
        for l, t in enumerate(PRIMITIVE_11_BASIS[k + 1:], k + 1):
            u = s + t
            items.append((f"|sigma|^2 basis{k}+{l}", vol_scalar(wedge(wedge(u, u), OMEGA)) == -norm2(u)))
    for i in range(1, 7):
        eta = Form.basis(6, i)
        x = star_eta_omega(eta)
        items.append((f"eta^2 e{i}", wedge(x, x) == hodge(wedge(eta, J_form(eta))) * 2))
        items.append((f"|eta| e{i}", norm2(x) == 2 * norm2(eta)))
    return IdentityReport(tuple(items))


def instanton_normal_form(alg, F):
    """(eta, sigma) with F = 1/2 *(eta ^ Omega_+) + sigma + eta ^ z."""
    _check_n1(alg)
    dF = ce_differential(alg, F)
    if dF:
        raise InstantonError("dF != 0", dF)
    res = wedge(F, PSI)
    if res:
        raise InstantonError("not an instanton: F ^ psi != 0", res)
    fv, eta = split_z(F)
    sigma = fv - star_eta_omega(eta) / 2
    if not is_primitive_11(sigma):
        raise AssertionError("instanton decomposition produced a non-primitive sigma")
    if form_rank(to6(alpha_of(alg))) in (4, 6) and eta:
        raise AssertionError("eta must vanish when rank(alpha) >= 4")
    return eta, sigma


def _check_n1(alg):
    s = alg.structure
    if any(s[i] for i in range(6)) or not s[6]:
        raise ValueError("expected derived dimension one with center e7")


def alpha_of(alg):
    _check_n1(alg)
    return alg.structure[6]


@dataclass(frozen=True)
class JEndo:
    """6x6 trace-free symmetric matrix commuting with J (rows/cols e1..e6)."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != 6 or any(len(r) != 6 for r in rows):
            raise ValueError("JEndo needs a 6x6 matrix")
        if any(rows[i][j] != rows[j][i] for i in range(6) for j in range(6)):
            raise ValueError("JEndo must be symmetric")
        if sum(rows[i][i] for i in range(6)):
            raise ValueError("JEndo must be trace-free")
        Jm = J_MATRIX
        if matmul(rows, Jm) != matmul(Jm, rows):
            raise ValueError("JEndo must commute with J")

    def blocks(self):
        """(X, Y) in the basis (e1, e3, e5, e2, e4, e6), L = (X, -Y; Y, X)."""
        odd, even = (0, 2, 4), (1, 3, 5)
        X = [[self.rows[i][j] for j in odd] for i in odd]
        Y = [[self.rows[i][j] for j in odd] for i in even]
        return X, Y

    @classmethod
    def from_blocks(cls, X, Y):
        rows = [[Fraction(0)] * 6 for _ in range(6)]
        odd, even = (0, 2, 4), (1, 3, 5)
        for a in range(3):
            for b in range(3):
                rows[odd[a]][odd[b]] = X[a][b]
                rows[even[a]][even[b]] = X[a][b]
                rows[even[a]][odd[b]] = Y[a][b]
                rows[odd[a]][even[b]] = -Y[a][b]
        return cls(tuple(map(tuple, rows)))

    def square(self):
        return matmul(self.rows, self.rows)


# J on vectors: J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}; column j is J e_j
J_MATRIX = [[Fraction(0)] * 6 for _ in range(6)]
for _i in (0, 2, 4):
    J_MATRIX[_i + 1][_i] = Fraction(1)
    J_MATRIX[_i][_i + 1] = Fraction(-1)


def _sigma_entry(s, i, j):
    if i == j:
        return Fraction(0)
    return s.coeff((1 << i) | (1 << j)) * (1 if i < j else -1)


def endo_of_form(s):
    """L with s(X, Y) = <L J X, Y>."""
    s = to6(s)
    if not is_primitive_11(s):
        raise ValueError("endo_of_form expects a primitive (1,1)-form")
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    for j in range(6):
        for m in (0, 2, 4):
            # J e_m = e_{m+1}:   s(e_m, e_j) = L[j][m+1]
            rows[j][m + 1] = _sigma_entry(s, m, j)
            # J e_{m+1} = -e_m: s(e_{m+1}, e_j) = -L[j][m]
            rows[j][m] = -_sigma_entry(s, m + 1, j)
    return JEndo(tuple(map(tuple, rows)))


def form_of_endo(L):
    rows = L.rows if isinstance(L, JEndo) else JEndo(L).rows
    LJ = matmul([list(r) for r in rows], J_MATRIX)
    coeffs = {}
    for i in range(6):
        for j in range(i + 1, 6):
            c = LJ[j][i]
            if c:
                coeffs[(1 << i) | (1 << j)] = c
    return Form(6, 2, coeffs)


def reduced_equation_check(alpha0, lam, pairs):
    """alpha0^2 - 4 lam^2 omega^2 = sum eps sigma^2, checked as forms and
    through L0^2 - sum eps L^2 = -8 lam^2 Id; the two verdicts must agree."""
    lam = Fraction(lam)
    alpha0 = to6(alpha0)
    lhs = wedge(alpha0, alpha0) - wedge(OMEGA, OMEGA) * (4 * lam * lam)
    rhs = Form(6, 4)
    for s, x in pairs:
        s = to6(s)
        rhs = rhs + wedge(s, s) * Fraction(x)
    by_forms = lhs == rhs
    M = endo_of_form(alpha0).square()
    for s, x in pairs:
        Ls = endo_of_form(to6(s)).square()
        M = [[M[i][j] - Fraction(x) * Ls[i][j] for j in range(6)] for i in range(6)]
    target = [[-8 * lam * lam * v for v in row] for row in identity(6)]
    by_endos = M == target
    if by_forms != by_endos:
        raise AssertionError("form and endomorphism versions of the reduced equation disagree")
    return by_forms


@dataclass(frozen=True)
class ReducedSystemReport:
    items: tuple

    @property
    def passed(self):
        return all(ok for _, ok in self.items)


def full_reduced_system_check(alpha0, lam, triples):
    """The four lines of the reduced system for (eta^r, sigma^r, eps_r)."""
    lam = Fraction(lam)
    alpha0 = to6(alpha0)
    alpha = OMEGA * (2 * lam) + alpha0
    items = []
    line1 = all(not wedge(to6(eta), alpha) for eta, _, _ in triples)
    items.append(("eta^alpha", line1))
    mixed = Form(6, 4)
    sq = Form(6, 4)
    last = Form(6, 3)
    rhs = Form(6, 4)
    for eta, s, x in triples:
        eta, s, x = to6(eta), to6(s), Fraction(x)
        X = star_eta_omega(eta)
        mixed = mixed + wedge(X, s) * x
        sq = sq + wedge(X, X) * x
        last = last + (wedge(X, eta) + wedge(s, eta) * 2) * x
        rhs = rhs + wedge(s, s) * x
    items.append(("mixed", not mixed and not sq))
    items.append(("quartic", wedge(alpha0, alpha0) - wedge(OMEGA, OMEGA) * (4 * lam * lam) == rhs))
    items.append(("cubic", not last))
    return ReducedSystemReport(tuple(items))


def assemble(lam, alpha0, pairs):
    """Algebra with dz = 2 lam omega + alpha0 and gauge forms F^r = sigma^r."""
    lam = Fraction(lam)
    alpha = OMEGA * (2 * lam) + to6(alpha0)
    if not alpha:
        raise ValueError("abelian: alpha = 0")
    if not alpha.is_integral():
        raise ValueError("2 lam omega + alpha0 is not integral")
    for s, _ in pairs:
        if not to6(s).is_integral():
            raise ValueError("gauge forms must be integral")
    if not reduced_equation_check(alpha0, lam, pairs):
        raise ValueError("reduced equation fails")
    alg = LieAlgebra.from_alphas([to7(alpha)])
    g = GaugeField(tuple(to7(to6(s)) for s, _ in pairs), tuple(Fraction(x) for _, x in pairs))
    return alg, g


def lambda_alpha0(alg):
    """(lambda, alpha0) with dz = 2 lambda omega + alpha0; needs tau2 = 0."""
    d = decompose2(alpha_of(alg))
    if d.beta:
        raise ValueError("alpha has a J-anti-invariant part (tau2 != 0)")
    return d.b / 2, d.sigma


def H_closed_form(alg):
    """2 lam phi - (4 lam omega - alpha0) ^ z."""
    from .g2 import PHI
    lam, alpha0 = lambda_alpha0(alg)
    return PHI * (2 * lam) - wedge(to7(OMEGA * (4 * lam) - alpha0), Z)


def dH_closed_form(alg):
    """alpha0 ^ alpha0 - 4 lam^2 omega ^ omega."""
    lam, alpha0 = lambda_alpha0(alg)
    return to7(wedge(alpha0, alpha0) - wedge(OMEGA, OMEGA) * (4 * lam * lam))
