"""Search for derived dimension two or three through the component equations.

A gauge form is F = F0 + sum_i v_i ^ z^i with F0 anti-self-dual on e1..e4 and
v3 = -J2 v1 + J1 v2, so each F is fixed by (v1, v2, F0).

For lam != 0 the quadratic equations force the structure forms,
alpha = Q / (2 lam) with Q_k = sum_r eps_r P_k^r and P^r = (v2^v3, v3^v1, v1^v2).
The remaining equations are homogeneous in eps except for the trace
sum_r eps_r t_r = 12 lam^2, so eps = s d with d a null direction that does not
depend on lam.  Everything except the integrality of alpha is then
independent of lam.

For lam = 0 the algebra must be given and the structure forms are fixed.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import isqrt

import numpy as np

from ..exterior import Form
from ..g2 import PHI
from ..nilalg import LieAlgebra, catalog_entry, fingerprint, validate
from ..su2red import OMEGAS, Components, J_MATRICES, assemble, su2_alphas
from .spec import Budget, SearchResult, Solution

PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
TRIPLES = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
ASD = np.array([[1, 0, 0, 0, 0, -1], [0, 1, 0, 0, 1, 0], [0, 0, 1, -1, 0, 0]], dtype=np.int64)


def _wedge_tensors():
    W2 = np.zeros((4, 4, 6), dtype=np.int64)
    for p, (a, b) in enumerate(PAIRS):
        W2[a, b, p] = 1
        W2[b, a, p] = -1
    W3 = np.zeros((4, 6, 4), dtype=np.int64)
    for c, (i, j, k) in enumerate(TRIPLES):
        for x, (y, z), s in ((i, (j, k), 1), (j, (i, k), -1), (k, (i, j), 1)):
            W3[x, PAIRS.index((y, z)), c] = s
    return W2, W3


W2, W3 = _wedge_tensors()


def _vec2(w):
    return np.array([int(w.coeff((1 << a) | (1 << b))) for a, b in PAIRS], dtype=np.int64)


OMEGA6 = np.array([_vec2(w) for w in OMEGAS])
JM = np.array([[[int(x) for x in row] for row in M] for M in J_MATRICES], dtype=np.int64)


def wedge11(a, b):
    return np.einsum("...a,...b,abp->...p", a, b, W2)


def wedge12(a, w):
    return np.einsum("...a,...p,apc->...c", a, w, W3)


def v3_of(v1, v2):
    return -v1 @ JM[1].T + v2 @ JM[0].T


def v_box(B):
    """All (v1, v2, v3) with every entry in [-B, B]: shape (N, 3, 4)."""
    g = np.arange(-B, B + 1, dtype=np.int64)
    grid = np.array(np.meshgrid(*([g] * 8), indexing="ij")).reshape(8, -1).T
    v1, v2 = grid[:, :4], grid[:, 4:]
    v3 = v3_of(v1, v2)
    keep = (np.abs(v3) <= B).all(axis=1)
    return np.stack([v1[keep], v2[keep], v3[keep]], axis=1)


def asd_box(B):
    g = range(-B, B + 1)
    abc = np.array(list(product(g, g, g)), dtype=np.int64)
    return abc @ ASD


def p_forms(V):
    """(v2^v3, v3^v1, v1^v2) as (N, 3, 6)."""
    return np.stack([wedge11(V[:, 1], V[:, 2]), wedge11(V[:, 2], V[:, 0]), wedge11(V[:, 0], V[:, 1])], axis=1)


def a_block(P):
    """A[i][j] = <omega_i, P_j>."""
    return np.einsum("ip,njp->nij", OMEGA6, P)


def antisym(A):
    return np.stack([A[:, 0, 1] - A[:, 1, 0], A[:, 0, 2] - A[:, 2, 0], A[:, 1, 2] - A[:, 2, 1]], axis=1)


def cross3(Va, Pb):
    """sum_i va_i ^ Pb_i as 3-forms."""
    return wedge12(Va, Pb).sum(axis=-2)


def eq3(V):
    """sum_i v_i ^ omega_i for each row."""
    return wedge12(V, OMEGA6[None]).sum(axis=1)


# block signed permutations of (e1..e4 | z1..z3) preserving phi

def _signed_perms(n):
    return [(perm, signs) for perm in permutations(range(n)) for signs in product((1, -1), repeat=n)]


def _parity(seq):
    return sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y]) % 2


def _phi_symmetries():
    """g with g e_a = s_a e_{perm a}: phi is preserved when every term maps onto
    a term of phi with the same coefficient."""
    terms = {tuple(t for t in range(7) if m >> t & 1): int(c) for m, c in PHI.terms}
    out = []
    for pa, sa in _signed_perms(4):
        for pc, sc in _signed_perms(3):
            perm = pa + tuple(4 + x for x in pc)
            sign = sa + sc
            ok = True
            for idx, c in terms.items():
                img = [perm[t] for t in idx]
                s = sign[idx[0]] * sign[idx[1]] * sign[idx[2]] * (-1 if _parity(img) else 1)
                if terms.get(tuple(sorted(img))) != s * c:
                    ok = False
                    break
            if ok:
                g = np.zeros((7, 7), dtype=np.int64)
                for a in range(7):
                    g[a, perm[a]] = sign[a]
                out.append(g)
    return np.array(out)


SYMMETRIES = _phi_symmetries()


def act_v(V):
    """Images of V (N, 3, 4) under SYMMETRIES: (G, N, 3, 4)."""
    A, C = SYMMETRIES[:, :4, :4], SYMMETRIES[:, 4:, 4:]
    return np.einsum("gac,nia,gij->gnjc", A, V, C, optimize=True)


def _action_12():
    # v'_j = sum_i C_ij A^T v_i as one 12 x 12 matrix per symmetry
    A, C = SYMMETRIES[:, :4, :4], SYMMETRIES[:, 4:, 4:]
    return np.array([np.kron(c, a) for a, c in zip(A, C)])


ACTION_12 = _action_12()


def _codes(X, B):
    """Integer code of (v1, v2), the first 8 entries of the last axis."""
    base = 2 * B + 1
    w = base ** np.arange(7, -1, -1, dtype=np.int64)
    return (X[..., :8] + B) @ w


def v_representatives(V, B):
    """Rows of V that are least in their orbit under SYMMETRIES and V -> -V."""
    flat = V.reshape(len(V), 12)
    G = len(ACTION_12)
    mats = np.ascontiguousarray(ACTION_12[:, :, :8].transpose(1, 0, 2).reshape(12, G * 8)).astype(np.float64)
    keep = np.zeros(len(V), dtype=bool)
    own = _codes(flat, B)
    for lo in range(0, len(V), 8192):
        img = np.rint(flat[lo:lo + 8192].astype(np.float64) @ mats).astype(np.int64).reshape(-1, G, 8)
        codes = np.minimum(_codes(img, B), _codes(-img, B)).min(axis=1)
        keep[lo:lo + 8192] = codes == own[lo:lo + 8192]
    return V[keep]


def form_of(v, f0):
    """The 7-dimensional gauge form of (v1, v2, v3) and F0 (6 components)."""
    coeffs = {}
    for p, (a, b) in enumerate(PAIRS):
        if f0[p]:
            coeffs[(1 << a) | (1 << b)] = Fraction(int(f0[p]))
    for i in range(3):
        for a in range(4):
            if v[i][a]:
                coeffs[(1 << a) | (1 << (4 + i))] = Fraction(int(v[i][a]))
    return Form(7, 2, coeffs)


def form4(w):
    coeffs = {}
    for p, (a, b) in enumerate(PAIRS):
        if w[p]:
            coeffs[(1 << a) | (1 << b)] = Fraction(w[p])
    return Form(7, 2, coeffs)


def _matrix_of(v, f0):
    M = np.zeros((7, 7), dtype=np.int64)
    for p, (a, b) in enumerate(PAIRS):
        M[a, b], M[b, a] = f0[p], -f0[p]
    for i in range(3):
        for a in range(4):
            M[a, 4 + i], M[4 + i, a] = v[i][a], -v[i][a]
    return M


def orbit_key(lam, data, eps):
    """Key of a solution (list of (V, F0) with eps) invariant under the phi
    symmetries, r-permutations and F^r -> -F^r."""
    mats = np.array([_matrix_of(v, f0) for v, f0 in data])
    img = np.einsum("gac,rab,gbd->grcd", SYMMETRIES, mats, SYMMETRIES).reshape(len(SYMMETRIES), len(data), 49)
    best = None
    for g in range(len(img)):
        blocks = []
        for r, e in enumerate(eps):
            row = img[g, r]
            nz = np.nonzero(row)[0]
            if len(nz) and row[nz[0]] > 0:
                row = -row
            blocks.append((e, tuple(row.tolist())))
        cand = tuple(sorted(blocks))
        if best is None or cand < best:
            best = cand
    return (Fraction(lam), best)


def gauge_data(forms):
    """(V, F0) lists of gauge forms given on e1..e4 | z1..z3."""
    out = []
    for f in forms:
        v = [[int(f.coeff((1 << a) | (1 << (4 + i)))) for a in range(4)] for i in range(3)]
        f0 = [int(f.coeff((1 << a) | (1 << b))) for a, b in PAIRS]
        out.append((v, f0))
    return out


def solution_key(sol):
    return orbit_key(sol.lam, list(zip(sol.data["V"], sol.data["F0"])), sol.eps)


class _Found:
    def __init__(self, spec, notes):
        self.spec = spec
        self.notes = notes
        self.seen = {}
        self.skipped_rank1 = 0
        self.target = fingerprint(catalog_entry(spec.target).algebra) if spec.target else None

    def add(self, lam, alphas, data, eps):
        """alphas: three integer 6-vectors; data: list of (V, F0)."""
        spec = self.spec
        eps = tuple(Fraction(x) for x in eps)
        if any(x == 0 for x in eps) or not spec.sign_ok(eps):
            return
        if spec.eps is not None and eps != spec.eps:
            return
        forms = [form_of(v, f0) for v, f0 in data]
        if any(not f for f in forms):
            return
        alg = LieAlgebra(tuple([Form(7, 2)] * 4 + [form4(a) for a in alphas]))
        dd = validate(alg).derived_dim
        if dd < 2:
            self.skipped_rank1 += 1
            return
        if spec.n_prime is not None and dd != spec.n_prime:
            return
        if self.target is not None and fingerprint(alg) != self.target:
            return
        key = orbit_key(lam, [(np.asarray(v).tolist(), np.asarray(f).tolist()) for v, f in data], eps)
        if key in self.seen:
            return
        comps = [Components(form4(f0), tuple(Form(7, 1, {1 << a: Fraction(int(v[i][a])) for a in range(4) if v[i][a]})
                                             for i in range(3)), (0, 0, 0)) for v, f0 in data]
        alg, g = assemble([form4(a) for a in alphas], comps, eps)
        self.seen[key] = Solution(Fraction(lam), alg, g, {"V": [np.asarray(v).tolist() for v, _ in data],
                                                          "F0": [np.asarray(f).tolist() for _, f in data]})


def _alpha_integral(Q, dt, lams):
    """lams for which alpha = 6 lam Q / dt is integral; none when the
    structure forms span less than two dimensions."""
    out = []
    if np.linalg.matrix_rank(Q.astype(np.float64)) < 2:
        return out
    for lam in lams:
        num = 6 * lam.numerator
        den = lam.denominator * dt
        if all((num * int(x)) % den == 0 for x in Q.ravel()):
            out.append(lam)
    return out


def _alphas(Q, dt, lam):
    return [[int(6 * lam * int(x) / dt) for x in row] for row in Q]


def _eps_of(d, dt, lam):
    return [Fraction(12) * lam * lam * int(x) / dt for x in d]


def _f0_norms(F0):
    return (F0 * F0).sum(axis=1)


def _k1(spec, V, F0, lams, found, budget):
    """One gauge form: v1^v2^v3 = 0, symmetric a-block, eps t = 12 lam^2."""
    P = p_forms(V)
    t = np.einsum("ip,nip->n", OMEGA6, P)
    ok = (~wedge12(V[:, 0], P[:, 0]).any(axis=1)) & (t != 0) & (~antisym(a_block(P)).any(axis=1))
    norms = _f0_norms(F0)
    for n in np.nonzero(ok)[0]:
        if budget.over():
            return
        Q, dt = P[n], int(t[n])
        good = _alpha_integral(Q, dt, lams)
        if not good:
            continue
        # (4): t |F0|^2 = 3 |P|^2 - t^2 and (5): F0 ^ v_i = 0
        want = 3 * int((Q * Q).sum()) - dt * dt
        y = wedge12(V[n][None, :, :], F0[:, None, :])
        sel = (norms * dt == want) & ~y.reshape(len(F0), -1).any(axis=1)
        for f in np.nonzero(sel)[0]:
            for lam in good:
                found.add(lam, _alphas(Q, dt, lam), [(V[n], F0[f])], _eps_of([1], dt, lam))


class _YCache:
    """F0 ^ v_i for every F0 in the box, per gauge vector part, computed on demand."""

    def __init__(self, V, F0):
        self.V, self.F0, self.cache = V, F0, {}

    def __getitem__(self, n):
        y = self.cache.get(n)
        if y is None:
            y = self.cache[n] = wedge12(self.V[n][None, :, :], self.F0[:, None, :]).reshape(len(self.F0), 12)
        return y


def _null_direction(c1, c2):
    """(rank, d) for the 2-column integer system c1 e1 + c2 e2 = 0 (rows stacked)."""
    n11 = (c1 * c1).sum(axis=-1)
    n22 = (c2 * c2).sum(axis=-1)
    n12 = (c1 * c2).sum(axis=-1)
    n11, n22, n12 = np.broadcast_arrays(n11, n22, n12)
    zero = (n11 == 0) & (n22 == 0)
    rank1 = ~zero & (n11 * n22 == n12 * n12)
    d = np.where((n11 != 0)[..., None], np.stack([-n12, n11], axis=-1), np.stack([n22, -n12], axis=-1))
    return zero, rank1, d


def _k2(spec, V, reps, F0, lams, found, budget):
    P = p_forms(V)
    t = np.einsum("ip,nip->n", OMEGA6, P)
    S = antisym(a_block(P))
    # sum_i v_i ^ P_i = 3 v1^v2^v3
    T3 = 3 * wedge12(V[:, 0], P[:, 0])
    Vf, Pf = V.reshape(len(V), 12), P.reshape(len(V), 18)
    norms = _f0_norms(F0)
    Y = _YCache(V, F0)
    index = {tuple(v.ravel().tolist()): n for n, v in enumerate(V)}
    examined = 0
    for v1 in reps:
        if budget.over():
            break
        examined += 1
        a = index[tuple(v1.ravel().tolist())]
        # Sum_i v_i^2 ^ P_i^1 and Sum_i v_i^1 ^ P_i^2, linear in the second gauge form
        M1 = np.einsum("ip,apc->iac", P[a], W3).reshape(12, 4)
        M2 = np.einsum("ia,apc->ipc", V[a], W3).reshape(18, 4)
        u2 = Vf @ M1
        w1 = Pf @ M2
        c1 = np.concatenate([np.broadcast_to(T3[a], (len(V), 4)), u2, np.broadcast_to(S[a], (len(V), 3))], axis=1)
        c2 = np.concatenate([w1, T3, S], axis=1)
        zero, rank1, d = _null_direction(c1, c2)
        dt = d[:, 0] * t[a] + d[:, 1] * t
        live = rank1 & (d[:, 0] != 0) & (d[:, 1] != 0) & (dt != 0)
        for b in np.nonzero(live)[0]:
            _finish(spec, V, P, Y, norms, F0, a, int(b), [int(d[b, 0]), int(d[b, 1])], lams, found)
        for b in np.nonzero(zero & ((t != 0) | (t[a] != 0)))[0]:
            _free(spec, V, P, t, Y, norms, F0, a, int(b), lams, found)
    return examined


def _finish(spec, V, P, Y, norms, F0, a, b, d, lams, found):
    Q = d[0] * P[a] + d[1] * P[b]
    dt = d[0] * int(np.einsum("ip,ip->", OMEGA6, P[a])) + d[1] * int(np.einsum("ip,ip->", OMEGA6, P[b]))
    good = _alpha_integral(Q, dt, lams)
    if not good:
        return
    want = 3 * int((Q * Q).sum()) - dt * dt
    # (5) d1 F0^1 ^ v^1 + d2 F0^2 ^ v^2 = 0 and (4) dt (d . n) = want
    ok5 = ~(d[0] * Y[a][:, None, :] + d[1] * Y[b][None, :, :]).any(axis=2)
    ok4 = (d[0] * norms[:, None] + d[1] * norms[None, :]) * dt == want
    for i, j in zip(*np.nonzero(ok5 & ok4)):
        for lam in good:
            found.add(lam, _alphas(Q, dt, lam), [(V[a], F0[i]), (V[b], F0[j])], _eps_of(d, dt, lam))


def _free(spec, V, P, t, Y, norms, F0, a, b, lams, found):
    """(2) and the a-block leave eps free: (5) or (4) must fix it."""
    zero, rank1, d = _null_direction(Y[a][:, None, :], Y[b][None, :, :])
    live = rank1 & (d[..., 0] != 0) & (d[..., 1] != 0)
    for i, j in zip(*np.nonzero(live)):
        _finish_pair(V, P, norms, F0, a, b, i, j, [int(d[i, j, 0]), int(d[i, j, 1])], lams, found)
    for i, j in zip(*np.nonzero(zero)):
        _quadratic(V, P, t, norms, F0, a, b, i, j, lams, found)


def _finish_pair(V, P, norms, F0, a, b, i, j, d, lams, found):
    Q = d[0] * P[a] + d[1] * P[b]
    dt = d[0] * int(np.einsum("ip,ip->", OMEGA6, P[a])) + d[1] * int(np.einsum("ip,ip->", OMEGA6, P[b]))
    if not dt:
        return
    if (d[0] * int(norms[i]) + d[1] * int(norms[j])) * dt != 3 * int((Q * Q).sum()) - dt * dt:
        return
    for lam in _alpha_integral(Q, dt, lams):
        found.add(lam, _alphas(Q, dt, lam), [(V[a], F0[i]), (V[b], F0[j])], _eps_of(d, dt, lam))


def _quadratic(V, P, t, norms, F0, a, b, i, j, lams, found):
    """eps on the line eps . t = 12 lam^2 with (4) quadratic along it."""
    t1, t2 = int(t[a]), int(t[b])
    # write eps = 12 lam^2 (x, y) with x t1 + y t2 = 1; then (4) reads
    # n . (x, y) = 36 lam^2 ... after scaling: n.(x,y) = 3 |x P1 + y P2|^2 - 1
    n1, n2 = int(norms[i]), int(norms[j])
    G11 = int((P[a] * P[a]).sum())
    G12 = int((P[a] * P[b]).sum())
    G22 = int((P[b] * P[b]).sum())
    sols = []
    if t2:
        # y = (1 - x t1) / t2 ; multiply through by t2^2
        # 3 (G11 x^2 t2^2 + 2 G12 x t2 (1 - x t1) + G22 (1 - x t1)^2) - t2^2 - t2 (n1 x t2 + n2 (1 - x t1)) = 0
        A = 3 * (G11 * t2 * t2 - 2 * G12 * t1 * t2 + G22 * t1 * t1)
        Bc = 3 * (2 * G12 * t2 - 2 * G22 * t1) - t2 * (n1 * t2 - n2 * t1)
        C = 3 * G22 - t2 * t2 - t2 * n2
        for x in _rational_roots(A, Bc, C):
            sols.append((x, (1 - x * t1) / t2))
    elif t1:
        x = Fraction(1, t1)
        # y free: 3 |x P1 + y P2|^2 - 1 - n1 x - n2 y = 0
        A = 3 * G22
        Bc = 6 * G12 * x - n2
        C = 3 * G11 * x * x - 1 - n1 * x
        for y in _rational_roots(A, Bc, C):
            sols.append((x, y))
    for x, y in sols:
        if not x or not y:
            continue
        den = np.lcm(x.denominator, y.denominator)
        d = [int(x * den), int(y * den)]
        _finish_pair(V, P, norms, F0, a, b, i, j, d, lams, found)


def _rational_roots(A, B, C):
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    if A == 0:
        if B == 0:
            return []
        return [-C / B]
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return []
    r = Fraction(rn, rd)
    return sorted({(-B + r) / (2 * A), (-B - r) / (2 * A)})


def search_n23(spec):
    if spec.reduction != "n23":
        raise ValueError("search_n23 needs reduction = n23")
    if spec.k > 2:
        raise ValueError("search_n23 supports k = 1 and k = 2")
    budget = Budget(spec.max_seconds)
    notes = []
    found = _Found(spec, notes)
    V = v_box(spec.bound)
    V = V[~eq3(V).any(axis=1)]
    F0 = asd_box(spec.bound)
    lams = [l for l in spec.lambdas if l != 0]
    examined = 0
    if lams:
        if spec.k == 1:
            reps = v_representatives(V, spec.bound)
            examined += len(reps)
            _k1(spec, reps, F0, lams, found, budget)
        else:
            reps = v_representatives(V, spec.bound)
            examined += _k2(spec, V, reps, F0, lams, found, budget)
    if any(l == 0 for l in spec.lambdas):
        examined += _lambda0(spec, V, F0, found, budget, notes)
    if found.skipped_rank1:
        notes.append(f"{found.skipped_rank1} candidates with derived dimension one skipped")
    sols = [found.seen[k] for k in sorted(found.seen, key=repr)]
    if spec.max_solutions is not None and len(sols) > spec.max_solutions:
        sols = sols[:spec.max_solutions]
        notes.append("solution cap reached")
    return SearchResult(spec, sols, examined, budget.elapsed(), not budget.exceeded, notes)


def _lambda0(spec, V, F0, found, budget, notes):
    """lam = 0 on a given algebra: alpha is fixed, (2) is linear per gauge form."""
    if spec.algebra is None:
        notes.append("lambda=0 skipped: needs an [algebra] section")
        return 0
    if spec.sign_ok((Fraction(-1),) * spec.k) and spec.signs is not None:
        notes.append("all eps negative: (4) has a positive right-hand side at lambda=0")
        return 0
    al = su2_alphas(spec.algebra)
    A = np.array([_vec2(a) for a in al])
    a_ij = np.einsum("ip,jp->ij", OMEGA6, A)
    if (a_ij != a_ij.T).any() or np.trace(a_ij) != 0:
        notes.append("lambda=0 skipped: the algebra is not G2T with lambda = 0")
        return 0
    R = int((A * A).sum())
    V = V[~np.einsum("nia,ip,apc->nc", V, A, W3).any(axis=1)]
    P = p_forms(V)
    norms = _f0_norms(F0)
    Y = wedge12(V[:, None, :, :], F0[None, :, None, :]).reshape(len(V), len(F0), 12)
    alphas = [a.tolist() for a in A]
    if spec.k == 1:
        # v_i ^ v_j = 0, F0 ^ v_i = 0, eps |F0|^2 = sum |alpha|^2
        ok = ~P.reshape(len(V), -1).any(axis=1)
        for n in np.nonzero(ok)[0]:
            for f in np.nonzero(~Y[n].any(axis=1) & (norms != 0))[0]:
                found.add(0, alphas, [(V[n], F0[f])], [Fraction(R, int(norms[f]))])
        return len(V)
    # k = 2: eps_1 (P^1, Y^1) + eps_2 (P^2, Y^2) = 0 and eps . n = R
    C = np.concatenate([np.broadcast_to(P.reshape(len(V), 1, 18), Y.shape[:2] + (18,)), Y], axis=2)
    C = C.reshape(-1, 30)
    nn = np.broadcast_to(norms[None, :], Y.shape[:2]).ravel()
    idx = [(n, f) for n in range(len(V)) for f in range(len(F0))]
    for x in range(len(C)):
        if budget.over():
            break
        zero, rank1, d = _null_direction(C[x][None], C[x:])
        for y in np.nonzero(rank1 | zero)[0]:
            y = x + int(y)
            cands = []
            if rank1[y - x]:
                cands = [(int(d[y - x, 0]), int(d[y - x, 1]))]
            elif nn[x] or nn[y]:
                # eps free on a line: any eps . n = R with both nonzero; keep the
                # representative with equal eps when it exists
                cands = [(1, 1)] if nn[x] + nn[y] else []
            for d0, d1 in cands:
                dn = d0 * int(nn[x]) + d1 * int(nn[y])
                if not dn or not d0 or not d1:
                    continue
                s = Fraction(R, dn)
                (n1, f1), (n2, f2) = idx[x], idx[y]
                found.add(0, alphas, [(V[n1], F0[f1]), (V[n2], F0[f2])], [s * d0, s * d1])
    return len(C)
