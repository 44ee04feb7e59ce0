"""Cocycle constants for principal torus bundles over 2-step nilmanifolds.

The lattice is generated by 6 e_i (closed directions) and z_r (center).  A
closed integral 2-form F = F1 + F2 with F1 on the closed directions and
F2 = sum_i e^i ^ eta^i, eta^i = sum_r Ft_ir z^r, has a potential whose
transition functions produce the constants c(gamma1, gamma2) computed here.
Lattice points are handled through their logarithms C in the Lie algebra.

Coordinates are always taken in the adapted order: closed directions first,
then the center.  Algebras whose center is not last (e.g. dz = e13, e14 on
e5, e6 with e7 closed) are relabelled by adapted() before anything else.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .exterior import Form
from .nilalg import ce_differential

DIM = 7


class NotClosedError(ValueError):
    pass


def relabel(a, perm):
    """The form a in the basis e'_k = e_{perm[k-1]}."""
    where = {old: new for new, old in enumerate(perm, 1)}
    coeffs = {}
    for m, c in a.terms:
        idx = [where[t + 1] for t in range(DIM) if m >> t & 1]
        inv = sum(1 for x in range(len(idx)) for y in range(x + 1, len(idx)) if idx[x] > idx[y])
        mask = sum(1 << (k - 1) for k in idx)
        coeffs[mask] = -c if inv % 2 else c
    return Form(a.n, a.p, coeffs)


@lru_cache(maxsize=256)
def adapted(alg):
    """(algebra, perm) with closed directions first and the center last."""
    from .nilalg import LieAlgebra
    if not alg.is_normal_form:
        raise ValueError("algebra must be two-step with structure forms on closed directions")
    perm = alg.closed_indices + alg.center_indices
    if perm == tuple(range(1, DIM + 1)):
        return alg, perm
    structure = tuple(relabel(alg.structure[i - 1], perm) for i in perm)
    return LieAlgebra(structure, alg.name), perm


def _base_dim(alg):
    return DIM - len(alg.center_indices)


@dataclass(frozen=True)
class LatticeVector:
    """C = sum m_i * scale * e_i + sum p_j z_j."""

    m: tuple
    p: tuple
    scale: int = 6

    def __post_init__(self):
        for x in self.m + self.p:
            if int(x) != x:
                raise ValueError("lattice coefficients must be integers")
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))

    def coords(self):
        return tuple(Fraction(self.scale * x) for x in self.m) + tuple(Fraction(x) for x in self.p)


def lattice_generators(alg, scale=6):
    b = _base_dim(adapted(alg)[0])
    out = []
    for i in range(DIM):
        v = [0] * DIM
        v[i] = 1
        out.append(LatticeVector(tuple(v[:b]), tuple(v[b:]), scale))
    return out


def _coords(C):
    if isinstance(C, LatticeVector):
        return C.coords()
    c = tuple(Fraction(x) for x in C)
    if len(c) != DIM:
        raise ValueError("expected 7 coordinates")
    return c


def bracket(alg, A, B):
    """[A, B] in coordinates; only the center part is nonzero."""
    alg = adapted(alg)[0]
    A, B = _coords(A), _coords(B)
    out = [Fraction(0)] * DIM
    for k in alg.center_indices:
        s = Fraction(0)
        for m, c in alg.structure[k - 1].terms:
            i, j = [t - 1 for t in range(1, DIM + 1) if m >> (t - 1) & 1]
            s += c * (A[i] * B[j] - A[j] * B[i])
        out[k - 1] = -s
    return tuple(out)


def bch(alg, A, B):
    """log(exp(A) exp(B)) = A + B + [A, B]/2 in a 2-step algebra."""
    A, B = _coords(A), _coords(B)
    br = bracket(alg, A, B)
    return tuple(a + b + x / 2 for a, b, x in zip(A, B, br))


def inverse(C):
    return tuple(-x for x in _coords(C))


@dataclass(frozen=True)
class SplitGauge:
    """F1[r][s] on closed directions (r < s), Ft[i][r] on e^i ^ z^r and c_ijk."""

    base: int
    F1: tuple
    Ft: tuple
    c: dict = field(compare=False, hash=False)

    def cyclic_defect(self):
        b = self.base
        out = {}
        for i, j, k in product(range(b), repeat=3):
            s = self.cijk(i, j, k) + self.cijk(j, k, i) + self.cijk(k, i, j)
            if s:
                out[(i, j, k)] = s
        return out

    def cijk(self, i, j, k):
        return self.c.get((i, j, k), Fraction(0))


def _num(x):
    return int(x) if x.denominator == 1 else x


def _split(alg, F):
    b = _base_dim(alg)
    n2 = DIM - b
    F1 = [[0] * b for _ in range(b)]
    Ft = [[0] * n2 for _ in range(b)]
    rest = {}
    for m, c in F.terms:
        i, j = [t for t in range(DIM) if m >> t & 1]
        if j < b:
            F1[i][j] = _num(c)
        elif i < b:
            Ft[i][j - b] = _num(c)
        else:
            rest[m] = c
    # c_ijk = d(eta^i)(e_j, e_k) = sum_r Ft_ir alpha_r(e_j, e_k)
    c = {}
    centers = alg.center_indices
    for i in range(b):
        for r in range(n2):
            if not Ft[i][r]:
                continue
            for m, a in alg.structure[centers[r] - 1].terms:
                j, k = [t - 1 for t in range(1, DIM + 1) if m >> (t - 1) & 1]
                c[(i, j, k)] = c.get((i, j, k), Fraction(0)) + Ft[i][r] * a
                c[(i, k, j)] = c.get((i, k, j), Fraction(0)) - Ft[i][r] * a
    c = {key: _num(v) for key, v in c.items() if v}
    sg = SplitGauge(b, tuple(map(tuple, F1)), tuple(map(tuple, Ft)), c)
    return sg, Form(DIM, 2, rest)


def split_gauge(alg, F, check_closed=True):
    """(F1, Ft) of an integral closed 2-form; check_closed=False skips the
    closedness test so that cocycle data of arbitrary forms can be inspected."""
    if not F.is_integral():
        raise ValueError("gauge form must have integer coefficients")
    alg, perm = adapted(alg)
    F = relabel(F, perm)
    sg, rest = _split(alg, F)
    if check_closed and (rest or ce_differential(alg, F)):
        raise NotClosedError("not closed")
    return sg


def structure_constants(alg):
    """c^r_jk with dz^r = -1/2 sum c^r_jk e^j ^ e^k."""
    out = {}
    for r, k in enumerate(alg.center_indices):
        for m, a in alg.structure[k - 1].terms:
            i, j = [t for t in range(1, DIM + 1) if m >> (t - 1) & 1]
            out[(r + 1, i, j)] = -a
            out[(r + 1, j, i)] = a
    return out


def cocycle_c(F, C1, C2):
    C1, C2 = _coords(C1), _coords(C2)
    if all(x.denominator == 1 for x in C1 + C2):
        # integer coordinates: accumulate 6c in exact integer arithmetic
        return Fraction(_six_c(F, [int(x) for x in C1], [int(x) for x in C2]), 6)
    return Fraction(_six_c(F, C1, C2), 6)


def _six_c(F, C1, C2):
    b = F.base
    out = 0
    for r in range(b):
        for s in range(r + 1, b):
            if F.F1[r][s]:
                out += 6 * F.F1[r][s] * C1[r] * C2[s]
    for i in range(b):
        eta = sum(F.Ft[i][r] * C2[b + r] for r in range(DIM - b))
        out += 6 * C1[i] * eta
    for (i, j, k), c in F.c.items():
        out -= c * C1[j] * C2[i] * C2[k] + 2 * c * C1[i] * C1[j] * C2[k]
    return out


def cocycle_condition_check(F2, alg):
    """c_ijk + c_jki + c_kij = 0, cross-checked against d(F2) = 0."""
    alg, perm = adapted(alg)
    if isinstance(F2, Form):
        F2 = relabel(F2, perm)
    sg, _ = _split(alg, F2) if isinstance(F2, Form) else (F2, None)
    ok = not sg.cyclic_defect()
    if isinstance(F2, Form):
        mixed = Form(DIM, 2, {m: c for m, c in F2.terms
                              if len([t for t in range(DIM) if m >> t & 1 and t >= sg.base]) == 1})
        if ok != (not ce_differential(alg, mixed)):
            raise AssertionError("cocycle condition disagrees with the differential")
    return ok


def _words(alg, gens, length):
    words = [(g.coords(), (n,)) for n, g in enumerate(gens)]
    out = list(words)
    layer = words
    for _ in range(length - 1):
        layer = [(bch(alg, w, g), lab + glab) for w, lab in layer for g, glab in words]
        out.extend(layer)
    return out


@dataclass(frozen=True)
class ScanReport:
    passed: bool
    pairs_checked: int
    failures: tuple
    denominators: int
    min_scale: object

    def lines(self):
        out = [f"SCAN pairs={self.pairs_checked} {'PASS' if self.passed else 'FAIL'}",
               f"SCAN denominator_lcm={self.denominators}",
               f"SCAN min_scale={self.min_scale}"]
        for a, b, c in self.failures[:5]:
            out.append(f"SCAN failure C1={_fmt(a)} C2={_fmt(b)} c={c}")
        return out


def _fmt(C):
    return "(" + ",".join(str(x) for x in C) + ")"


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


def _plain(C):
    return tuple(int(x) if x.denominator == 1 else x for x in C)


def _scan(alg, F, gens, word_length):
    gens = list(gens)
    elems = [_plain(w) for w, _ in _words(alg, gens, word_length)]
    signed = [_plain(g.coords()) for g in gens] + [_plain(inverse(g)) for g in gens]
    pairs = [(a, b) for a in signed for b in signed]
    for w in elems:
        for g in signed:
            pairs.append((w, g))
            pairs.append((g, w))
    failures = []
    den = 1
    count = 0
    for a, b in dict.fromkeys(pairs):
        c = Fraction(_six_c(F, a, b), 6)
        count += 1
        den = _lcm(den, c.denominator)
        if c.denominator != 1:
            failures.append((a, b, c))
    return count, failures, den


def integrality_scan(F, generators, alg, word_length=3):
    """c in Z on generator pairs and on products of up to word_length generators.

    The reported min_scale is the smallest divisor s of the generator scale for
    which the same sample is integral with s in place of that scale."""
    generators = list(generators)
    count, failures, den = _scan(alg, F, generators, word_length)
    scale = generators[0].scale if generators else 1
    min_scale = None
    for s in (d for d in range(1, scale + 1) if scale % d == 0):
        gs = [LatticeVector(g.m, g.p, s) for g in generators]
        if not _scan(alg, F, gs, min(word_length, 2))[1]:
            min_scale = s
            break
    return ScanReport(not failures, count, tuple(failures), den, min_scale)


def oracle_cocycle(alg, F, C1, C2):
    """Independent route: compose the transition functions f_gamma as
    polynomials in log coordinates Y and read off the constant
    f_{g2}(Y) + f_{g1}(g2 . Y) - f_{g1 g2}(Y)."""
    import sympy

    alg = adapted(alg)[0]
    C1, C2 = _coords(C1), _coords(C2)
    b = F.base
    Y = sympy.symbols("y1:8")

    def eta(i, X):
        return sum(sympy.Rational(F.Ft[i][r]) * X[b + r] for r in range(DIM - b))

    def f(C, X):
        C = [sympy.Rational(x) for x in C]
        out = 0
        for r in range(b):
            for s in range(r + 1, b):
                out += sympy.Rational(F.F1[r][s]) * C[r] * X[s]
        for i in range(b):
            out += C[i] * eta(i, X)
        for (i, j, k), c in F.c.items():
            c = sympy.Rational(c)
            out -= c * C[j] * X[i] * X[k] / 6
            out -= c * C[i] * C[j] * X[k] / 3
        return out

    def act(C, X):
        # log(exp(C) exp(X)) for symbolic X
        out = [sympy.Rational(C[t]) + X[t] for t in range(DIM)]
        for k in alg.center_indices:
            s = 0
            for m, a in alg.structure[k - 1].terms:
                i, j = [t - 1 for t in range(1, DIM + 1) if m >> (t - 1) & 1]
                s += sympy.Rational(a) * (C[i] * X[j] - C[j] * X[i])
            out[k - 1] -= s / 2
        return out

    C12 = bch(alg, C1, C2)
    expr = sympy.expand(f(C2, Y) + f(C1, act(C2, Y)) - f(C12, Y))
    if expr.free_symbols:
        raise AssertionError(f"cocycle not constant: {expr}")
    return Fraction(int(expr.p), int(expr.q))
