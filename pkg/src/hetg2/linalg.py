"""Small exact linear algebra over the rationals.

sympy does the heavy lifting; these wrappers keep conversions in one place.
"""

from fractions import Fraction

import sympy


def _to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                          for c in row] for row in rows])


def _to_fraction(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def rank(rows):
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return _to_sympy(rows).rank()


def forms_rank(forms):
    """Dimension of the span of a list of forms of equal degree."""
    forms = [f for f in forms if f]
    if not forms:
        return 0
    masks = sorted({m for f in forms for m, _ in f.terms})
    return rank([[f.coeff(m) for m in masks] for f in forms])


def solve(rows, rhs):
    """All solutions of rows * x = rhs as (particular, kernel basis), or None."""
    A = _to_sympy(rows)
    b = _to_sympy([[c] for c in rhs])
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    zero = {p: 0 for p in params}
    particular = [_to_fraction(v) for v in sol.subs(zero)]
    kernel = [[_to_fraction(v) for v in vec] for vec in A.nullspace()]
    return particular, kernel


def nullspace(rows, ncols):
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return [[_to_fraction(v) for v in vec] for vec in _to_sympy(rows).nullspace()]


def matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0))
             for j in range(len(B[0]))] for i in range(len(A))]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]
