"""Integral trace-free symmetric endomorphisms of R^6 commuting with J, seen
as trace-free Hermitian 3x3 matrices H = X + iY over the Gaussian integers.

A matrix is stored as the 9 integers (x1, x2, x3, a12, b12, a13, b13, a23, b23)
with h_jk = a_jk + i b_jk; squares use the same layout (diagonal, then real
and imaginary parts of the upper triangle).
"""

from fractions import Fraction
from itertools import permutations, product

import numpy as np

from ..su3red import JEndo

WEIGHTS = np.array([1, 1, 1, 2, 2, 2, 2, 2, 2], dtype=np.int64)


def box(B):
    """All trace-free Hermitian matrices with every entry part in [-B, B]."""
    g = np.arange(-B, B + 1, dtype=np.int64)
    grid = np.array(np.meshgrid(*([g] * 8), indexing="ij")).reshape(8, -1).T
    x3 = -grid[:, 0] - grid[:, 1]
    keep = np.abs(x3) <= B
    grid = grid[keep]
    return np.column_stack([grid[:, 0], grid[:, 1], x3[keep], grid[:, 2:]])


def quadrant(B):
    """Gaussian integers in the box up to multiplication by units: 0 and Re > 0, Im >= 0."""
    return [(0, 0)] + [(a, b) for a in range(1, B + 1) for b in range(0, B + 1)]


def representatives(B):
    """A complete set of representatives of the box under conjugation by
    monomial unitary matrices and H -> -H: sorted diagonal x1 >= x2 >= x3 with
    x2 <= 0, and h12, h13 in the quadrant."""
    q = np.array(quadrant(B), dtype=np.int64)
    g = np.arange(-B, B + 1, dtype=np.int64)
    h23 = np.array([(p, s) for p in g for s in g], dtype=np.int64)
    blocks = []
    for x1 in range(B, -B - 1, -1):
        for x2 in range(0, -B - 1, -1):
            x3 = -x1 - x2
            if not (x1 >= x2 >= x3 and abs(x3) <= B):
                continue
            i, j, k = np.meshgrid(np.arange(len(q)), np.arange(len(q)), np.arange(len(h23)), indexing="ij")
            i, j, k = i.ravel(), j.ravel(), k.ravel()
            n = len(i)
            blocks.append(np.column_stack([np.full(n, x1), np.full(n, x2), np.full(n, x3),
                                           q[i], q[j], h23[k]]))
    return np.vstack(blocks)


def complex_matrices(h):
    """(N, 3, 3) complex array from (N, 9) entries."""
    h = np.atleast_2d(h)
    H = np.zeros((len(h), 3, 3), dtype=np.complex128)
    for t in range(3):
        H[:, t, t] = h[:, t]
    for c, (a, b) in enumerate(((0, 1), (0, 2), (1, 2))):
        z = h[:, 3 + 2 * c] + 1j * h[:, 4 + 2 * c]
        H[:, a, b] = z
        H[:, b, a] = np.conj(z)
    return H


def from_complex(H):
    if H.ndim == 2:
        H = H[None]
    out = [H[:, 0, 0].real, H[:, 1, 1].real, H[:, 2, 2].real]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        out += [H[:, a, b].real, H[:, a, b].imag]
    return np.rint(np.column_stack(out)).astype(np.int64)


def square(h):
    """Entries of H^2 for (N, 9) integer entries, exact in int64."""
    x1, x2, x3, a12, b12, a13, b13, a23, b23 = (h[:, t] for t in range(9))
    n12 = a12 * a12 + b12 * b12
    n13 = a13 * a13 + b13 * b13
    n23 = a23 * a23 + b23 * b23
    # S12 = (x1 + x2) h12 + h13 conj(h23)
    r12 = (x1 + x2) * a12 + a13 * a23 + b13 * b23
    i12 = (x1 + x2) * b12 + b13 * a23 - a13 * b23
    # S13 = (x1 + x3) h13 + h12 h23
    r13 = (x1 + x3) * a13 + a12 * a23 - b12 * b23
    i13 = (x1 + x3) * b13 + b12 * a23 + a12 * b23
    # S23 = conj(h12) h13 + (x2 + x3) h23
    r23 = a12 * a13 + b12 * b13 + (x2 + x3) * a23
    i23 = a12 * b13 - b12 * a13 + (x2 + x3) * b23
    return np.column_stack([x1 * x1 + n12 + n13, n12 + x2 * x2 + n23, n13 + n23 + x3 * x3,
                            r12, i12, r13, i13, r23, i23])


def trace_product(S, T):
    """tr(S T) for Hermitian matrices in the 9-entry layout."""
    return (S * T * WEIGHTS).sum(axis=-1)


def semidefinite_mask(T):
    """Rows that can be a multiple of a positive semidefinite matrix: the
    diagonal has one sign and the principal 2x2 minors are nonnegative."""
    d = T[:, :3]
    same = (d >= 0).all(axis=1) | (d <= 0).all(axis=1)
    m12 = T[:, 0] * T[:, 1] - T[:, 3] ** 2 - T[:, 4] ** 2
    m13 = T[:, 0] * T[:, 2] - T[:, 5] ** 2 - T[:, 6] ** 2
    m23 = T[:, 1] * T[:, 2] - T[:, 7] ** 2 - T[:, 8] ** 2
    return same & (m12 >= 0) & (m13 >= 0) & (m23 >= 0)


def trace(S):
    return S[..., 0] + S[..., 1] + S[..., 2]


def primitive(T):
    """Divide rows by the gcd of their entries and make the first nonzero entry
    positive; zero rows stay zero."""
    g = np.gcd.reduce(np.abs(T), axis=1)
    g[g == 0] = 1
    P = T // g[:, None]
    nz = P != 0
    first = np.where(nz.any(axis=1), nz.argmax(axis=1), 0)
    sign = np.sign(P[np.arange(len(P)), first])
    sign[sign == 0] = 1
    return P * sign[:, None]


_MULT = np.array([0x9E3779B97F4A7C15, 0xC2B2AE3D27D4EB4F, 0x165667B19E3779F9, 0x27D4EB2F165667C5,
                  0x85EBCA77C2B2AE63, 0xFF51AFD7ED558CCD, 0xC4CEB9FE1A85EC53, 0x94D049BB133111EB,
                  0xBF58476D1CE4E5B9], dtype=np.uint64)


def hash_rows(T):
    with np.errstate(over="ignore"):
        return (T.astype(np.uint64) * _MULT).sum(axis=1, dtype=np.uint64)


class SquareTable:
    """Lookup of the distinct squares of box matrices, exactly or up to
    positive or negative scaling.  members(u) lists the box matrices whose
    square is S[u]."""

    def __init__(self, hs, projective=True):
        self.h = hs
        self.S, inverse = np.unique(square(hs), axis=0, return_inverse=True)
        inverse = inverse.ravel()
        order = np.argsort(inverse, kind="stable")
        self._members = order
        self._start = np.searchsorted(inverse[order], np.arange(len(self.S) + 1))
        self.projective = projective
        keys = primitive(self.S) if projective else self.S
        self.keys = keys
        hsh = hash_rows(keys)
        order = np.argsort(hsh, kind="stable")
        self.order = order
        self.sorted_hash = hsh[order]

    def members(self, u):
        return self.h[self._members[self._start[u]:self._start[u + 1]]]

    def expand(self, pairs):
        """All (h1, h2) with squares S[u1], S[u2] for (u1, u2) in pairs: (N, 2, 9)."""
        out = []
        for u1, u2 in pairs:
            A, B = self.members(u1), self.members(u2)
            out.append(np.stack([np.repeat(A, len(B), axis=0), np.tile(B, (len(A), 1))], axis=1))
        if not out:
            return np.zeros((0, 2, 9), dtype=np.int64)
        return np.concatenate(out)

    def lookup(self, T):
        """Indices i (per row of T) with key(S_i) == key(T); returns (rows, idx)."""
        keys = primitive(T) if self.projective else T
        hsh = hash_rows(keys)
        lo = np.searchsorted(self.sorted_hash, hsh, side="left")
        hi = np.searchsorted(self.sorted_hash, hsh, side="right")
        rows, idx = [], []
        for r in np.nonzero(hi > lo)[0]:
            for pos in range(lo[r], hi[r]):
                i = self.order[pos]
                if np.array_equal(self.keys[i], keys[r]):
                    rows.append(r)
                    idx.append(i)
        return np.array(rows, dtype=np.int64), np.array(idx, dtype=np.int64)


class RootFinder:
    """All box matrices H with H^2 equal to a given Hermitian T.

    The first row (x1, h12, h13) is drawn from a table bucketed by its norm
    T11; the remaining unknowns (x2, h23) then satisfy a linear system A u = r
    whose normal matrix is (|h12|^2 + |h13|^2) Id."""

    def __init__(self, B):
        self.B = B
        g = np.arange(-B, B + 1, dtype=np.int64)
        rows = np.array(np.meshgrid(*([g] * 5), indexing="ij")).reshape(5, -1).T
        norms = (rows * rows).sum(axis=1)
        order = np.argsort(norms, kind="stable")
        rows, norms = rows[order], norms[order]
        self.buckets = {}
        for n in np.unique(norms):
            self.buckets[int(n)] = rows[norms == n]
        rest = np.array(np.meshgrid(g, g, g, indexing="ij")).reshape(3, -1).T
        self.rest = rest

    def roots(self, T):
        """T as 9 integers; returns (N, 9) integer matrices in the box."""
        T = np.asarray(T, dtype=np.int64)
        cand = self.buckets.get(int(T[0]))
        if cand is None:
            return np.zeros((0, 9), dtype=np.int64)
        x1, a, b, c, d = cand.T
        s = a * a + b * b + c * c + d * d
        out = []
        gen = s > 0
        if gen.any():
            x1g, ag, bg, cg, dg, sg = x1[gen], a[gen], b[gen], c[gen], d[gen], s[gen]
            r0 = T[3] - ag * x1g
            r1 = T[4] - bg * x1g
            r2 = T[5]
            r3 = T[6]
            # A^T r with A = [[a, c, d], [b, d, -c], [-c, a, -b], [-d, b, a]]
            u0 = ag * r0 + bg * r1 - cg * r2 - dg * r3
            u1 = cg * r0 + dg * r1 + ag * r2 + bg * r3
            u2 = dg * r0 - cg * r1 - bg * r2 + ag * r3
            ok = (u0 % sg == 0) & (u1 % sg == 0) & (u2 % sg == 0)
            x2 = u0 // sg
            p = u1 // sg
            q = u2 // sg
            x3 = -x1g - x2
            B = self.B
            ok &= (np.abs(x2) <= B) & (np.abs(x3) <= B) & (np.abs(p) <= B) & (np.abs(q) <= B)
            H = np.column_stack([x1g, x2, x3, ag, bg, cg, dg, p, q])[ok]
            out.append(H)
        if (~gen).any():
            for x1v in x1[~gen]:
                n = len(self.rest)
                x2, p, q = self.rest.T
                x3 = -x1v - x2
                z = np.zeros(n, dtype=np.int64)
                H = np.column_stack([np.full(n, x1v), x2, x3, z, z, z, z, p, q])
                out.append(H[np.abs(x3) <= self.B])
        if not out:
            return np.zeros((0, 9), dtype=np.int64)
        H = np.vstack(out)
        return H[(square(H) == T[None, :]).all(axis=1)]


def to_endo(h):
    """JEndo of a 9-entry Hermitian matrix: X = Re H, Y = Im H."""
    h = [int(v) for v in h]
    X = [[h[0], h[3], h[5]], [h[3], h[1], h[7]], [h[5], h[7], h[2]]]
    Y = [[0, h[4], h[6]], [-h[4], 0, h[8]], [-h[6], -h[8], 0]]
    return JEndo.from_blocks(X, Y)


def from_endo(L):
    X, Y = L.blocks()
    vals = [X[0][0], X[1][1], X[2][2], X[0][1], Y[0][1], X[0][2], Y[0][2], X[1][2], Y[1][2]]
    if any(Fraction(v).denominator != 1 for v in vals):
        raise ValueError("endomorphism is not integral")
    return tuple(int(v) for v in vals)


def _unitaries():
    out = []
    for perm in permutations(range(3)):
        P = np.zeros((3, 3), dtype=np.complex128)
        for i, j in enumerate(perm):
            P[i, j] = 1
        for d2, d3 in product((1, 1j, -1, -1j), repeat=2):
            out.append(np.diag([1, d2, d3]) @ P)
    return np.array(out)


UNITARIES = _unitaries()


def _symmetry_matrices():
    # the action is real-linear on the 9 entries: record the images of a basis
    H = complex_matrices(np.eye(9, dtype=np.int64))
    U = UNITARIES[:, None]
    K = U @ H[None] @ np.conj(np.swapaxes(U, -1, -2))
    K = np.concatenate([K, np.conj(K)])
    return from_complex(K.reshape(-1, 3, 3)).reshape(len(K), 9, 9)


SYMMETRY_MATRICES = _symmetry_matrices()


def symmetry_images(h):
    """Entries of the images of the matrices h (m, 9) under conjugation by
    monomial unitary matrices and under complex conjugation: (192, m, 9)."""
    return np.einsum("mt,gts->gms", np.atleast_2d(np.asarray(h, dtype=np.int64)), SYMMETRY_MATRICES)


def sign_normalize(t):
    """The one of +-t whose first nonzero entry is negative (lexicographically smaller)."""
    nz = t != 0
    first = nz.argmax(axis=-1)
    lead = np.take_along_axis(t, first[..., None], axis=-1)[..., 0]
    return np.where((lead > 0)[..., None], -t, t)


def rank(h):
    """Complex rank of each matrix, exact for small integer entries."""
    H = complex_matrices(h)
    det = np.rint(np.linalg.det(H).real).astype(np.int64)
    S = np.zeros(len(H), dtype=bool)
    for a, b in ((0, 1), (0, 2), (1, 2)):
        for c, d in ((0, 1), (0, 2), (1, 2)):
            m = H[:, a, c] * H[:, b, d] - H[:, a, d] * H[:, b, c]
            S |= np.abs(m) > 0.5
    nz = np.abs(H).sum(axis=(1, 2)) > 0.5
    return np.where(det != 0, 3, np.where(S, 2, np.where(nz, 1, 0)))
