"""Slow reference implementations used only to cross-check the library.

Forms are dicts {sorted index tuple: Fraction}; signs come from explicit
permutation parity, Lie brackets from dense structure constants.
"""

from fractions import Fraction
from itertools import combinations, permutations


def parity(seq):
    seq = list(seq)
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def from_form(f):
    out = {}
    for m, c in f.terms:
        out[tuple(i + 1 for i in range(f.n) if m >> i & 1)] = c
    return out


def wedge(a, b):
    out = {}
    for ia, ca in a.items():
        for ib, cb in b.items():
            idx = ia + ib
            if len(set(idx)) < len(idx):
                continue
            key = tuple(sorted(idx))
            out[key] = out.get(key, 0) + parity(idx) * ca * cb
    return {k: v for k, v in out.items() if v}


def hodge(a, n):
    out = {}
    for idx, c in a.items():
        rest = tuple(i for i in range(1, n + 1) if i not in idx)
        out[rest] = out.get(rest, 0) + parity(idx + rest) * c
    return {k: v for k, v in out.items() if v}


def evaluate(a, vectors):
    """a(v1, ..., vp) for dense vectors, via the determinant formula."""
    total = Fraction(0)
    for idx, c in a.items():
        for perm in permutations(range(len(idx))):
            term = Fraction(parity(perm))
            for k, v in zip(perm, vectors):
                term *= v[idx[k] - 1]
            total += c * term
    return total


def brackets(structure, n=7):
    """[e_i, e_j] = -sum_k de^k(e_i, e_j) e_k as dense vectors."""
    unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    out = {}
    for i, j in combinations(range(n), 2):
        vec = [-evaluate(from_form(structure[k]), [unit[i], unit[j]]) for k in range(n)]
        out[(i, j)] = vec
    return out


def scalar_curvature(structure, n=7):
    """Koszul formula for a left-invariant orthonormal frame, via
    Scal = sum_ij <R(e_i, e_j) e_j, e_i> with nabla_X Y from Koszul."""
    br = brackets(structure, n)

    def bracket(u, v):
        out = [Fraction(0)] * n
        for i in range(n):
            for j in range(n):
                if u[i] and v[j] and i != j:
                    a, b, s = (i, j, 1) if i < j else (j, i, -1)
                    vec = br[(a, b)]
                    for k in range(n):
                        out[k] += s * u[i] * v[j] * vec[k]
        return out

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def nabla(u, v):
        # 2<nabla_u v, w> = <[u,v],w> - <[v,w],u> + <[w,u],v>
        out = []
        for w in unit:
            out.append((dot(bracket(u, v), w) - dot(bracket(v, w), u) + dot(bracket(w, u), v)) / 2)
        return out

    total = Fraction(0)
    for a in range(n):
        for b in range(n):
            x, y = unit[a], unit[b]
            r = [p - q - s for p, q, s in zip(nabla(x, nabla(y, y)), nabla(y, nabla(x, y)),
                                           nabla(bracket(x, y), y))]
            total += dot(r, x)
    return total
