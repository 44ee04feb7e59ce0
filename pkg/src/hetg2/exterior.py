"""Exact exterior algebra over an oriented orthonormal coframe.

A blade e^{i1...ip} is stored as a bitmask (bit i-1 set for index i) and a
form is a sparse map from blades of a fixed degree to rational coefficients.
The coframe e^1..e^n is orthonormal and the orientation is e^{1..n}.
"""

from fractions import Fraction
from itertools import combinations

Rational = Fraction

MAX_DIM = 8


def blade(*indices):
    """Bitmask of the blade e^{i1...ip}; indices are 1-based."""
    mask = 0
    for i in indices:
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated index {i} in blade")
        mask |= bit
    return mask


def blade_indices(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def degree_of(mask):
    return bin(mask).count("1")


def merge_sign(a, b):
    """Sign of e^A ^ e^B relative to e^{A|B}; 0 when the blades overlap."""
    if a & b:
        return 0
    swaps = 0
    for i in blade_indices(b):
        # elements of a above index i must hop over it
        swaps += degree_of(a >> i)
    return -1 if swaps & 1 else 1


def blades_of_degree(n, p):
    return [blade(*c) for c in combinations(range(1, n + 1), p)]


class Form:
    """Homogeneous p-form on R^n with exact rational coefficients.

    Forms are immutable.  Terms are kept sorted by blade bitmask with zero
    coefficients removed, so equality is equality of the term tuples.
    """

    __slots__ = ("n", "p", "terms", "_hash")

    def __init__(self, n, p, coeffs=None):
        if not 0 <= n <= MAX_DIM:
            raise ValueError(f"dimension {n} out of range")
        if not 0 <= p <= n:
            raise ValueError(f"degree {p} out of range for dimension {n}")
        items = []
        if coeffs:
            top = 1 << n
            for mask, c in dict(coeffs).items():
                if mask >= top or degree_of(mask) != p:
                    raise ValueError(f"blade {blade_indices(mask)} does not fit a {p}-form on R^{n}")
                c = Fraction(c)
                if c:
                    items.append((mask, c))
        items.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", tuple(items))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # construction helpers

    @classmethod
    def zero(cls, n, p):
        return cls(n, p)

    @classmethod
    def scalar(cls, n, c):
        return cls(n, 0, {0: c})

    @classmethod
    def basis(cls, n, *indices, coeff=1):
        return cls(n, len(indices), {blade(*indices): coeff})

    @classmethod
    def volume(cls, n):
        return cls(n, n, {(1 << n) - 1: 1})

    # mapping-like access

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, mask):
        for m, c in self.terms:
            if m == mask:
                return c
        return Fraction(0)

    def __getitem__(self, indices):
        if isinstance(indices, int):
            indices = (indices,)
        return self.coeff(blade(*indices))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def support(self):
        """Bitmask of all indices touched by some term."""
        out = 0
        for m, _ in self.terms:
            out |= m
        return out

    def is_integral(self):
        return all(c.denominator == 1 for _, c in self.terms)

    def scalar_value(self):
        if self.p not in (0, self.n):
            raise ValueError("only 0-forms and top forms have a scalar value")
        return self.terms[0][1] if self.terms else Fraction(0)

    # linear structure

    def _check(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        if other.p != self.p:
            raise ValueError(f"degree mismatch: {self.p} vs {other.p}")
        return True

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return Form(self.n, self.p, acc)

    __radd__ = __add__

    def __neg__(self):
        return Form(self.n, self.p, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if isinstance(k, Form):
            return NotImplemented
        k = Fraction(k)
        return Form(self.n, self.p, {m: c * k for m, c in self.terms})

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / Fraction(k))

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Form):
            return NotImplemented
        return (self.n, self.p, self.terms) == (other.n, other.p, other.terms)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.p, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Form({self.n}, {self.p}, {render(self)!r})"

    def __str__(self):
        return render(self)

    # change of ambient space

    def embed(self, n):
        """Same form viewed on R^n with n >= self.n (extra indices on top)."""
        return Form(n, self.p, dict(self.terms))

    def restrict(self, n):
        """Drop the terms touching indices above n."""
        top = 1 << n
        return Form(n, self.p, {m: c for m, c in self.terms if m < top})


def wedge(a, b):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    if a.p + b.p > a.n:
        return Form(a.n, a.n)
    acc = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            s = merge_sign(ma, mb)
            if s:
                m = ma | mb
                acc[m] = acc.get(m, 0) + s * ca * cb
    return Form(a.n, a.p + b.p, acc)


def wedge_all(*forms):
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def hodge(a):
    """Hodge star fixed by a ^ *b = <a, b> vol."""
    full = (1 << a.n) - 1
    acc = {}
    for m, c in a.terms:
        rest = full ^ m
        acc[rest] = merge_sign(m, rest) * c
    return Form(a.n, a.n - a.p, acc)


def inner(a, b):
    """Pairing making increasing monomials orthonormal; 0 across degrees."""
    if a.n != b.n or a.p != b.p:
        return Fraction(0)
    bd = dict(b.terms)
    return sum((c * bd[m] for m, c in a.terms if m in bd), Fraction(0))


def norm2(a):
    return sum((c * c for _, c in a.terms), Fraction(0))


def contract(a, b):
    """Interior product a _| b, adjoint to a ^ (.)."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    if a.p > b.p:
        raise ValueError(f"cannot contract a {a.p}-form into a {b.p}-form")
    acc = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            if ma & mb != ma:
                continue
            rest = mb ^ ma
            acc[rest] = acc.get(rest, 0) + merge_sign(ma, rest) * ca * cb
    return Form(a.n, b.p - a.p, acc)


def standard_J(n=6):
    """The complex structure J(e_{2i-1}) = e_{2i} on the coframe of R^n."""
    if n % 2:
        raise ValueError("J needs an even dimension")

    def J(i):
        # image of the basis 1-form e^i, returned as (index, sign)
        return (i + 1, 1) if i % 2 else (i - 1, -1)

    return J


def apply_J(a, J=None):
    """Act with J on a form as an algebra automorphism of the coframe."""
    J = J or standard_J(a.n)
    acc = {}
    for m, c in a.terms:
        idx = blade_indices(m)
        images = [J(i) for i in idx]
        sign = 1
        for _, s in images:
            sign *= s
        f = Form.scalar(a.n, sign * c)
        for j, _ in images:
            f = wedge(f, Form.basis(a.n, j))
        for mm, cc in f.terms:
            acc[mm] = acc.get(mm, 0) + cc
    return Form(a.n, a.p, acc)


def lefschetz_dual(a, J=None):
    """Lambda = 1/2 sum_i Je_i _| e_i _| a, for a 4-form on R^6."""
    if a.n != 6 or a.p != 4:
        raise ValueError("lefschetz_dual expects a 4-form on R^6")
    J = J or standard_J(6)
    out = Form(6, 2)
    for i in range(1, 7):
        j, s = J(i)
        out = out + contract(Form.basis(6, j, coeff=s), contract(Form.basis(6, i), a))
    return out * Fraction(1, 2)


def _render_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(a):
    """Canonical text: terms in lexicographic index order, e.g. 'e12 - 1/2 e56'."""
    if not a.terms:
        return "0"
    parts = []
    for k, (m, c) in enumerate(sorted(a.terms, key=lambda t: tuple(blade_indices(t[0])))):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        name = "e" + "".join(str(i) for i in blade_indices(m)) if m else ""
        if not name:
            body = _render_coeff(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{_render_coeff(mag)} {name}"
        if k == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def e(spec, n=7):
    """Shorthand: e('127') is the blade e^{127} on R^n."""
    return Form.basis(n, *(int(ch) for ch in str(spec)))
