"""Two-step nilpotent Lie algebras given by structure equations.

An algebra is stored by the differentials (de^1, ..., de^7) of an orthonormal
coframe.  In normal form the first coordinates are closed and the remaining
ones (the center coordinates z^r) have dz^r = alpha_r built from the closed
ones.  Brackets follow the convention d(beta)(X, Y) = -beta([X, Y]).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .exterior import Form, blade, blade_indices, blades_of_degree, norm2, wedge
from .linalg import forms_rank, rank

DIM = 7


def _as_form(x):
    if isinstance(x, Form):
        if x.n != DIM or x.p != 2:
            raise ValueError("structure forms must be 2-forms on R^7")
        return x
    if x == 0:
        return Form(DIM, 2)
    raise TypeError(f"cannot use {x!r} as a structure form")


@dataclass(frozen=True)
class LieAlgebra:
    """Seven-dimensional algebra given by (de^1, ..., de^7)."""

    structure: tuple
    name: str = ""

    def __post_init__(self):
        s = tuple(_as_form(x) for x in self.structure)
        if len(s) != DIM:
            raise ValueError(f"need {DIM} structure forms, got {len(s)}")
        object.__setattr__(self, "structure", s)

    @classmethod
    def from_alphas(cls, alphas, name=""):
        """Normal form: dz^r = alpha_r for the last len(alphas) coordinates."""
        alphas = [_as_form(a) for a in alphas]
        base = DIM - len(alphas)
        return cls(tuple([Form(DIM, 2)] * base + alphas), name)

    @property
    def n(self):
        return DIM

    def d_basis(self, i):
        return self.structure[i - 1]

    @cached_property
    def closed_indices(self):
        return tuple(i for i in range(1, DIM + 1) if not self.structure[i - 1])

    @cached_property
    def center_indices(self):
        """Coordinates with nonzero differential, i.e. spanning the derived algebra."""
        return tuple(i for i in range(1, DIM + 1) if self.structure[i - 1])

    @property
    def alphas(self):
        return tuple(self.structure[i - 1] for i in self.center_indices)

    @property
    def derived_dim(self):
        return forms_rank(self.alphas)

    @property
    def is_abelian(self):
        return not self.center_indices

    @cached_property
    def is_normal_form(self):
        """Closed coordinates first, structure forms built from them only."""
        centers = self.center_indices
        if not centers:
            return True
        m = centers[0] - 1
        prefix = (1 << m) - 1
        return all(self.structure[i - 1].support() & ~prefix == 0 for i in centers)

    def bracket(self, i, j):
        """[e_i, e_j] as a dict index -> coefficient."""
        if i == j:
            return {}
        lo, hi, sgn = (i, j, 1) if i < j else (j, i, -1)
        m = blade(lo, hi)
        out = {}
        for k in range(1, DIM + 1):
            c = self.structure[k - 1].coeff(m)
            if c:
                out[k] = -sgn * c
        return out

    def structure_constant(self, i, j, k):
        """c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k."""
        return self.bracket(i, j).get(k, Fraction(0))

    def __str__(self):
        return self.name or salamon(self)


def salamon(alg):
    from .exterior import render
    parts = ["0" if not f else render(f).replace(" ", "") for f in alg.structure]
    return "(" + ",".join(parts) + ")"


_D_CACHE = {}


def _d_blade(alg, mask):
    key = (alg.structure, mask)
    hit = _D_CACHE.get(key)
    if hit is not None:
        return hit
    idx = blade_indices(mask)
    p = len(idx)
    out = Form(DIM, p + 1)
    for t, i in enumerate(idx):
        di = alg.structure[i - 1]
        if not di:
            continue
        left = Form.basis(DIM, *idx[:t]) if t else Form.scalar(DIM, 1)
        right = Form.basis(DIM, *idx[t + 1:]) if t + 1 < p else Form.scalar(DIM, 1)
        term = wedge(wedge(left, di), right)
        out = out + (term if t % 2 == 0 else -term)
    if len(_D_CACHE) > 200000:
        _D_CACHE.clear()
    _D_CACHE[key] = out
    return out


def ce_differential(alg, a):
    """Chevalley-Eilenberg differential, the anti-derivation extending de^i."""
    if a.n != DIM:
        raise ValueError(f"forms must live on R^{DIM}, got R^{a.n}")
    if a.p == DIM:
        return Form(DIM, DIM)
    acc = {}
    for m, c in a.terms:
        for mm, cc in _d_blade(alg, m).terms:
            acc[mm] = acc.get(mm, 0) + c * cc
    return Form(DIM, a.p + 1, acc)


@dataclass(frozen=True)
class Diagnostics:
    d_squared_zero: bool
    independent: bool
    integral: bool
    two_step: bool
    abelian: bool
    normal_form: bool
    derived_dim: int
    messages: tuple = field(default=())

    @property
    def ok(self):
        return (self.d_squared_zero and self.independent and self.integral
                and self.two_step and not self.abelian)


def validate(alg):
    """Collect structural diagnostics instead of raising."""
    msgs = []
    d2 = all(not ce_differential(alg, f) for f in alg.structure)
    if not d2:
        msgs.append("d^2 != 0: structure equations violate the Jacobi identity")
    alphas = alg.alphas
    dd = forms_rank(alphas)
    independent = dd == len(alphas)
    if not independent:
        msgs.append("dependent structure forms")
    integral = all(f.is_integral() for f in alphas)
    if not integral:
        msgs.append("non-integral structure constants")
    closed = 0
    for i in alg.closed_indices:
        closed |= 1 << (i - 1)
    two_step = all(f.support() & ~closed == 0 for f in alphas)
    if not two_step:
        msgs.append("some structure form involves a non-closed coordinate")
    abelian = not alphas
    if abelian:
        msgs.append("abelian algebra")
    nf = alg.is_normal_form
    if not nf:
        msgs.append("not in normal form (center coordinates are not last)")
    return Diagnostics(d2, independent, integral, two_step, abelian, nf, dd, tuple(msgs))


def form_rank(a):
    """Rank of a 2-form: 2k with a^k != 0 and a^(k+1) = 0."""
    if a.p != 2:
        raise ValueError("rank is defined here for 2-forms")
    k, power = 0, Form.scalar(a.n, 1)
    while True:
        nxt = wedge(power, a)
        if not nxt:
            return 2 * k
        k, power = k + 1, nxt


@dataclass(frozen=True)
class Fingerprint:
    derived_dim: int
    rank_alpha: object
    wedge_span_dim: int
    ranks: tuple
    all_wedges_vanish: bool
    support_dim: int
    wedge_form_rank: int


def _support_dim(alphas):
    # dimension of the smallest subspace of 1-forms carrying every alpha:
    # the span of all contractions e_i _| alpha
    from .exterior import contract
    vecs = []
    for a in alphas:
        for i in range(1, DIM + 1):
            vecs.append(contract(Form.basis(DIM, i), a))
    return forms_rank(vecs)


def fingerprint(alg):
    alphas = alg.alphas
    wedges = [wedge(alphas[i], alphas[j]) for i in range(len(alphas)) for j in range(i, len(alphas))]
    q_rank = _pencil_quadric_rank(alphas)
    return Fingerprint(
        derived_dim=len(alphas),
        rank_alpha=form_rank(alphas[0]) if len(alphas) == 1 else None,
        wedge_span_dim=forms_rank(wedges),
        ranks=tuple(sorted(form_rank(a) for a in alphas)),
        all_wedges_vanish=all(not w for w in wedges),
        support_dim=_support_dim(alphas),
        wedge_form_rank=q_rank,
    )


def _pencil_quadric_rank(alphas):
    """Rank of the symmetric pairing (i, j) -> alpha_i ^ alpha_j along the top
    wedge direction when the wedge span is at most one-dimensional."""
    wedges = {(i, j): wedge(alphas[i], alphas[j]) for i in range(len(alphas)) for j in range(len(alphas))}
    masks = sorted({m for w in wedges.values() for m, _ in w.terms})
    if len(masks) != 1 and forms_rank(list(wedges.values())) > 1:
        return -1
    if not masks:
        return 0
    if len(masks) > 1:
        # one-dimensional span not along a single blade; pick a spanning form
        ref = next(w for w in wedges.values() if w)
        m0 = ref.terms[0][0]
        scale = ref.terms[0][1]
        matrix = [[wedges[i, j].coeff(m0) / scale for j in range(len(alphas))] for i in range(len(alphas))]
    else:
        m0 = masks[0]
        matrix = [[wedges[i, j].coeff(m0) for j in range(len(alphas))] for i in range(len(alphas))]
    return rank(matrix)


@lru_cache(maxsize=4096)
def scalar_curvature(alg):
    """Scalar curvature of the left-invariant metric with orthonormal e_i,
    assembled from the Koszul formula."""
    n = DIM
    idx = range(1, n + 1)
    c = {}
    for i in idx:
        for j in idx:
            for k, v in alg.bracket(i, j).items():
                c[i, j, k] = v

    def br(i, j, k):
        return c.get((i, j, k), 0)

    gamma = {}
    for i in idx:
        for j in idx:
            for k in idx:
                g = Fraction(br(i, j, k) - br(j, k, i) + br(k, i, j), 2)
                if g:
                    gamma[i, j, k] = g

    def nabla(i, vec):
        out = {}
        for j, a in vec.items():
            for k in idx:
                g = gamma.get((i, j, k))
                if g:
                    out[k] = out.get(k, 0) + a * g
        return out

    def add(u, v, s=1):
        out = dict(u)
        for k, a in v.items():
            out[k] = out.get(k, 0) + s * a
        return out

    scal = Fraction(0)
    for i in idx:
        for j in idx:
            # <R(e_i, e_j) e_j, e_i>, R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]
            ej = {j: Fraction(1)}
            r = add(nabla(i, nabla(j, ej)), nabla(j, nabla(i, ej)), -1)
            for k, a in alg.bracket(i, j).items():
                r = add(r, nabla(k, ej), -a)
            scal += r.get(i, 0)
    return scal


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    derived_dim: int
    display: str


def _f(text):
    from .parse import parse_form
    return parse_form(text)


_CATALOG = [
    ("h3+R4", "(0,0,0,0,0,0,e12)"),
    ("h5+R2", "(0,0,0,0,0,0,e12+e34)"),
    ("h7", "(0,0,0,0,0,0,e12+e34+e56)"),
    ("n52+R2", "(0,0,0,0,e12,e13,0)"),
    ("h3+h3+R", "(0,0,0,0,e12,e34,0)"),
    ("h3C+R", "(0,0,0,0,e13-e24,e14+e23,0)"),
    ("n62+R", "(0,0,0,0,e12,e14+e23,0)"),
    ("n72A", "(0,0,0,0,0,e12,e14+e35)"),
    ("n72B", "(0,0,0,0,0,e12+e34,e15+e23)"),
    ("n63+R", "(0,0,0,0,e12,e13,e23)"),
    ("n73A", "(0,0,0,0,e12,e23,e24)"),
    ("n73B", "(0,0,0,0,e12,e23,e34)"),
    ("n73B1", "(0,0,0,0,e12-e34,e13+e24,e14)"),
    ("n73C", "(0,0,0,0,e12+e34,e23,e24)"),
    ("n73D", "(0,0,0,0,e12+e34,e13,e24)"),
    ("n73D1", "(0,0,0,0,e12-e34,e13+e24,e14-e23)"),
]


def catalog():
    """The two-step nilpotent algebras of dimension 7, by derived dimension."""
    from .parse import parse_algebra
    out = []
    for name, display in _CATALOG:
        alg = parse_algebra(display, name=name)
        out.append(CatalogEntry(name, alg, alg.derived_dim, display))
    return out


def catalog_entry(name):
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(name)


def abelian():
    return LieAlgebra.from_alphas([], name="R7")
