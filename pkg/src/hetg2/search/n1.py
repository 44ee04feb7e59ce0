"""Search for derived dimension one: L0^2 - sum eps_r L_r^2 = -8 lam^2 Id.

Everything runs on Hermitian 3x3 matrices (see hermitian.py).  L0 ranges
over symmetry representatives, the gauge matrices over the whole box.  For
k = 2 the pairing constant eps_1 is forced: with f(X) = tr X^2 - (tr X)^2/2,
which vanishes on squares of trace-free 3x3 matrices, f(M - eps_1 S_1) = 0
is linear in eps_1.
"""

from fractions import Fraction

import numpy as np

from ..exterior import Form
from ..hetsys import GaugeField
from ..nilalg import LieAlgebra
from ..su3red import OMEGA, endo_of_form, to7
from . import hermitian as hm
from .spec import Budget, SearchResult, Solution

ID9 = np.array([1, 1, 1, 0, 0, 0, 0, 0, 0], dtype=np.int64)


def _f2(M):
    """2 f(M) = 2 tr M^2 - (tr M)^2."""
    return 2 * hm.trace_product(M, M) - hm.trace(M) ** 2


def _b2(M, S):
    """2 B(M, S) = 2 tr(M S) - tr M tr S."""
    return 2 * hm.trace_product(S, M) - hm.trace(S) * hm.trace(M)


def _lambda_groups(lambdas, notes):
    groups = {}
    for lam in lambdas:
        if (2 * lam).denominator != 1:
            notes.append(f"lambda={lam} skipped: 2*lambda must be an integer for integral alpha")
            continue
        groups.setdefault(lam * lam, []).append(lam)
    return groups


def _scaled_M(h0, lam2):
    """(q, q (H0^2 + 8 lam^2 Id)) with q the denominator of 8 lam^2."""
    c = 8 * lam2
    q = c.denominator
    return q, q * hm.square(h0) + (c.numerator) * ID9


def _rank_filter(reps, spec, lams):
    if spec.alpha_rank is None:
        return reps
    keep = np.zeros(len(reps), dtype=bool)
    for lam in lams:
        for s in (1, -1):
            h = s * reps + int(2 * lam) * ID9
            keep |= hm.rank(h) * 2 == spec.alpha_rank
    return reps[keep]


class _Collector:
    def __init__(self, spec):
        self.spec = spec
        self.seen = {}
        self._rank = {}

    def prime_ranks(self, reps, lams):
        if self.spec.alpha_rank is None:
            return
        for lam in lams:
            for sgn in (1, -1):
                h = sgn * reps + int(2 * lam) * ID9
                for row, r in zip(map(tuple, h.tolist()), hm.rank(h).tolist()):
                    self._rank[row] = 2 * r

    def _alpha_rank(self, alpha_h):
        r = self._rank.get(alpha_h)
        if r is None:
            r = self._rank[alpha_h] = int(hm.rank(np.array([alpha_h]))[0]) * 2
        return r

    def add(self, h0, lam, hs, eps):
        self.add_batch(h0, lam, np.asarray(hs, dtype=np.int64)[None], eps)

    def add_batch(self, h0, lam, H, eps):
        """Record (h0, H[n], eps) for every n; H has shape (N, k, 9)."""
        spec = self.spec
        if not len(H) or not spec.sign_ok(eps):
            return
        shift = int(2 * lam)
        alpha_h = tuple(int(h0[t]) + (shift if t < 3 else 0) for t in range(9))
        if not any(alpha_h):
            return
        if spec.alpha_rank is not None and self._alpha_rank(alpha_h) != spec.alpha_rank:
            return
        H = H[H.any(axis=2).all(axis=1)]
        if spec.nontrivial:
            H = H[~_proportional(H, np.array(alpha_h)).all(axis=1)]
        if not len(H):
            return
        for key, n in zip(_canonical(h0, lam, H, eps), range(len(H))):
            if key not in self.seen:
                self.seen[key] = (tuple(int(v) for v in h0), lam,
                                  tuple(tuple(int(v) for v in h) for h in H[n]), tuple(eps))


def _proportional(H, a):
    """H[..., :] parallel to a, exact."""
    cross = H[..., :, None] * a[None, :] - H[..., None, :] * a[:, None]
    return ~cross.any(axis=(-1, -2))


def _lex_less(a, b):
    """a < b in lexicographic order along the last axis."""
    d = a - b
    first = (d != 0).argmax(axis=-1)
    return np.take_along_axis(d, first[..., None], axis=-1)[..., 0] < 0


def _lex_min_rows(A):
    """Boolean mask (G, N) of the lexicographically least rows of A[:, n] for each n."""
    cand = np.ones(A.shape[:2], dtype=bool)
    big = np.iinfo(np.int64).max
    for c in range(A.shape[2]):
        col = A[:, :, c]
        m = np.where(cand, col, big).min(axis=0)
        cand &= col == m[None]
    return cand


def _canonical(h0, lam, H, eps):
    """Orbit keys: the lexicographically least image of (h0; (eps_r, +-h_r) sorted)
    under the symmetry group, one per row of H."""
    N, k = H.shape[:2]
    img0 = hm.symmetry_images(np.asarray(h0, dtype=np.int64)[None])
    # only group elements minimizing the image of h0 can win
    g = np.nonzero(_lex_min_rows(img0)[:, 0])[0]
    first = img0[g[0], 0]
    mats = hm.SYMMETRY_MATRICES[g]
    G = len(g)
    rest = np.einsum("mt,gts->gms", H.reshape(N * k, 9), mats).reshape(G, N, k, 9)
    rest = hm.sign_normalize(rest)
    levels = sorted(set(eps))
    rank = np.array([levels.index(e) for e in eps], dtype=np.int64)
    blocks = np.concatenate([np.broadcast_to(rank[None, None, :, None], (G, N, k, 1)), rest], axis=3)
    if k == 2:
        swap = _lex_less(blocks[:, :, 1], blocks[:, :, 0])
        blocks = np.where(swap[..., None, None], blocks[:, :, ::-1], blocks)
    elif k > 2:
        order = np.lexsort(np.moveaxis(blocks, 3, 0)[::-1], axis=-1)
        blocks = np.take_along_axis(blocks, order[..., None], axis=2)
    A = blocks.reshape(G, N, -1)
    best = A[_lex_min_rows(A).argmax(axis=0), np.arange(N)]
    head = (lam, tuple(levels), tuple(first.tolist()))
    return [head + (tuple(row),) for row in best.tolist()]


def _solve_k1(spec, reps, groups, coll, budget, finder):
    examined = 0
    maxrow = 5 * spec.bound ** 2
    for lam2, lams in groups.items():
        q, Ms = _scaled_M(reps, lam2)
        for idx in range(len(reps)):
            if budget.over():
                return examined
            examined += 1
            M = Ms[idx]
            if not M.any():
                continue
            trM = int(hm.trace(M))
            if spec.eps is not None:
                e = spec.eps[0] * q
                TM = M * e.denominator
                if (TM % e.numerator).any():
                    continue
                targets = [(TM // e.numerator, spec.eps[0])]
            else:
                if spec.signs == "-":
                    continue  # tr M > 0 = eps tr S1 forces eps > 0
                P = hm.primitive(M[None])[0]
                targets = []
                t = 1
                while (t * P[:3] <= maxrow).all():
                    T = t * P
                    targets.append((T, Fraction(trM, q * int(hm.trace(T)))))
                    t += 1
            for T, e in targets:
                R = finder.roots(T)
                if not len(R):
                    continue
                for lam in lams:
                    for h0 in (reps[idx], -reps[idx]):
                        coll.add_batch(h0, lam, R[:, None], [e])
    return examined


def _solve_k2(spec, reps, groups, coll, budget, notes):
    table = hm.SquareTable(hm.box(spec.bound), projective=spec.eps is None)
    S = table.S
    trS = hm.trace(S)
    maxdiag = 5 * spec.bound ** 2
    Sdiag = np.ascontiguousarray(S[:, :3])
    examined = 0
    all_negative = spec.signs == "--"
    for lam2, lams in groups.items():
        q, Ms = _scaled_M(reps, lam2)
        for idx in range(len(reps)):
            if budget.over():
                return examined
            examined += 1
            M = Ms[idx]
            if not M.any():
                continue
            if all_negative:
                continue  # tr M > 0 while sum eps_r tr S_r <= 0
            if spec.eps is not None:
                e1, e2 = (x * q for x in spec.eps)
                num = e2.denominator * e1.denominator
                # e2 S2 = M - e1 S1, scaled to integers
                T = (num * M[None, :] - int(e1 * num) * S)
                if (T % int(e2 * num) != 0).any(axis=1).all():
                    continue
                ok = (T % int(e2 * num) == 0).all(axis=1)
                T2 = T[ok] // int(e2 * num)
                fits = ((T2[:, :3] >= 0) & (T2[:, :3] <= maxdiag)).all(axis=1) & hm.semidefinite_mask(T2)
                ok[np.nonzero(ok)[0][~fits]] = False
                T2 = T2[fits]
                rows, hits = table.lookup(T2)
                base = np.nonzero(ok)[0]
                pairs = table.expand(zip(base[rows].tolist(), hits.tolist()))
                for lam in lams:
                    for h0 in (reps[idx], -reps[idx]):
                        coll.add_batch(h0, lam, pairs, list(spec.eps))
                continue
            F2 = int(_f2(M[None])[0])
            B2 = S @ (2 * M * hm.WEIGHTS - int(hm.trace(M)) * ID9)
            if F2 == 0:
                _degenerate(spec, reps[idx], lams, q, M, table, B2, coll, budget)
                continue
            # each pair is found from the side with the larger eps_r tr S_r:
            # 2 eps_1 tr S1 >= tr M with eps_1 = F2 / (2 B2)
            cand = (B2 != 0) & (F2 * trS * B2 >= int(hm.trace(M)) * B2 * B2)
            if spec.signs is not None:
                want = 1 if spec.signs[0] == "+" else -1
                cand &= np.sign(B2) * np.sign(F2) == want
            ii = np.nonzero(cand)[0]
            # 2 B2 M - F2 S1 = eps_2 (2 B2) S2 with S2 = t P a square in the box,
            # P = primitive: the diagonal of P is at most 5 B^2, which can be
            # tested over the gcd of the diagonal alone
            D = 2 * B2[ii, None] * M[None, :3] - F2 * Sdiag[ii]
            keep = (D >= 0).all(axis=1) | (D <= 0).all(axis=1)
            ii, D = ii[keep], D[keep]
            g3 = np.gcd(np.gcd(D[:, 0], D[:, 1]), D[:, 2])
            keep = (g3 != 0) & (np.abs(D) <= maxdiag * g3[:, None]).all(axis=1)
            ii = ii[keep]
            if not len(ii):
                continue
            T = 2 * B2[ii, None] * M[None, :] - F2 * S[ii]
            nz = hm.semidefinite_mask(T)
            if spec.signs is not None:
                want = 1 if spec.signs[1] == "+" else -1
                nz &= np.sign(hm.trace(T)) * np.sign(B2[ii]) == want
            ii, T = ii[nz], T[nz]
            rows, hits = table.lookup(T)
            batches = {}
            for r, j in zip(rows.tolist(), hits.tolist()):
                i = int(ii[r])
                e1 = Fraction(F2, 2 * int(B2[i]))
                c = int(np.nonzero(S[j])[0][0])
                e2 = Fraction(int(T[r][c]), 2 * int(B2[i]) * int(S[j][c]))
                batches.setdefault((e1 / q, e2 / q), []).append((i, j))
            for eps, ij in batches.items():
                pairs = table.expand(ij)
                for lam in lams:
                    for h0 in (reps[idx], -reps[idx]):
                        coll.add_batch(h0, lam, pairs, list(eps))
    return examined


def _degenerate(spec, h0, lams, q, M, table, B2, coll, budget):
    """lam = 0 and B(M, S1) = 0: solve M = e1 S1 + e2 S2 directly."""
    S = table.S
    for i in np.nonzero(B2 == 0)[0]:
        if budget.over():
            return
        S1 = S[i]
        g11 = int(hm.trace_product(S1, S1))
        if not g11:
            continue
        g12 = hm.trace_product(S, S1[None, :])
        g22 = hm.trace_product(S, S)
        m1 = int(hm.trace_product(M, S1))
        m2 = hm.trace_product(S, M[None, :])
        det = g11 * g22 - g12 * g12
        for j in np.nonzero(det != 0)[0]:
            d = int(det[j])
            e1 = Fraction(m1 * int(g22[j]) - int(g12[j]) * int(m2[j]), d)
            e2 = Fraction(g11 * int(m2[j]) - int(g12[j]) * m1, d)
            if not e1 or not e2:
                continue
            lhs = [e1 * int(a) + e2 * int(b) for a, b in zip(S1, S[j])]
            if lhs != [Fraction(int(m)) for m in M]:
                continue
            pairs = table.expand([(i, j)])
            for lam in lams:
                coll.add_batch(h0, lam, pairs, [e1 / q, e2 / q])
                coll.add_batch(-h0, lam, pairs, [e1 / q, e2 / q])


def form_of_h(h):
    """The primitive (1,1)-form sigma(X, Y) = <L J X, Y> of a Hermitian matrix."""
    h = [int(v) for v in h]
    X = [[h[0], h[3], h[5]], [h[3], h[1], h[7]], [h[5], h[7], h[2]]]
    Y = [[0, h[4], h[6]], [-h[4], 0, h[8]], [-h[6], -h[8], 0]]
    L = [[0] * 6 for _ in range(6)]
    for a in range(3):
        for b in range(3):
            L[2 * a][2 * b] = L[2 * a + 1][2 * b + 1] = X[a][b]
            L[2 * a + 1][2 * b] = Y[a][b]
            L[2 * a][2 * b + 1] = -Y[a][b]
    coeffs = {}
    for i in range(6):
        for j in range(i + 1, 6):
            c = L[j][i + 1] if i % 2 == 0 else -L[j][i - 1]
            if c:
                coeffs[(1 << i) | (1 << j)] = Fraction(c)
    return Form(6, 2, coeffs)


def _build(entry):
    h0, lam, hs, eps = entry
    M = hm.square(np.array([h0]))[0] + int(8 * lam * lam) * ID9
    rhs = sum(e * hm.square(np.array([h]))[0] for h, e in zip(hs, eps))
    if any(Fraction(int(m)) != r for m, r in zip(M, rhs)):
        raise AssertionError("search produced a pair violating the reduced equation")
    alpha = OMEGA * (2 * lam) + form_of_h(h0)
    alg = LieAlgebra.from_alphas([to7(alpha)])
    g = GaugeField(tuple(to7(form_of_h(h)) for h in hs), tuple(Fraction(x) for x in eps))
    return Solution(lam, alg, g, {"L0": h0, "L": hs})


def _assert_collinear(spec, sol):
    if spec.signs is None or spec.signs[0] != "+" or "+" in spec.signs[1:]:
        return
    if sol.lam != 0:
        raise AssertionError("solution with one positive eps and lambda != 0")
    M = hm.square(np.array([sol.data["L0"]]))[0]
    for h, e in zip(sol.data["L"], sol.eps):
        S = hm.square(np.array([h]))[0]
        if np.linalg.matrix_rank(np.vstack([M, S]).astype(float)) > 1:
            raise AssertionError("squares not collinear for a (+,-,...,-) solution")


def search_n1(spec):
    if spec.reduction != "n1":
        raise ValueError("search_n1 needs reduction = n1")
    if spec.k > 2:
        raise ValueError("search_n1 supports k = 1 and k = 2")
    budget = Budget(spec.max_seconds)
    notes = []
    groups = _lambda_groups(spec.lambdas, notes)
    lams = [l for ls in groups.values() for l in ls]
    reps = _rank_filter(hm.representatives(spec.bound), spec, lams)
    coll = _Collector(spec)
    coll.prime_ranks(reps, lams)
    if spec.k == 1:
        examined = _solve_k1(spec, reps, groups, coll, budget, hm.RootFinder(spec.bound))
    else:
        examined = _solve_k2(spec, reps, groups, coll, budget, notes)
    solutions = []
    for key in sorted(coll.seen, key=repr):
        if spec.max_solutions is not None and len(solutions) >= spec.max_solutions:
            notes.append("solution cap reached")
            break
        sol = _build(coll.seen[key])
        _assert_collinear(spec, sol)
        solutions.append(sol)
    return SearchResult(spec, solutions, examined, budget.elapsed(), not budget.exceeded, notes)


def h_of_form(s):
    """Inverse of form_of_h for an integral primitive (1,1)-form."""
    return hm.from_endo(endo_of_form(s))


def orbit_key(lam, alpha0, forms, eps):
    """Symmetry-invariant key of a solution given by forms, for comparisons
    with search output."""
    lam = Fraction(lam)
    h0 = np.array(h_of_form(alpha0), dtype=np.int64)
    H = np.array([[h_of_form(f) for f in forms]], dtype=np.int64)
    keys = [_canonical(sgn * h0, lam, H, [Fraction(e) for e in eps])[0] for sgn in (1, -1)]
    return min(keys)


def solution_key(sol):
    h0 = np.array(sol.data["L0"], dtype=np.int64)
    H = np.array([sol.data["L"]], dtype=np.int64)
    return min(_canonical(sgn * h0, sol.lam, H, list(sol.eps))[0] for sgn in (1, -1))


def solution_keys(sols):
    """solution_key for many solutions, batched over shared (h0, lambda, eps)."""
    groups = {}
    for n, sol in enumerate(sols):
        groups.setdefault((tuple(sol.data["L0"]), sol.lam, tuple(sol.eps)), []).append(n)
    out = [None] * len(sols)
    for (h0, lam, eps), idx in groups.items():
        h0 = np.array(h0, dtype=np.int64)
        H = np.array([sols[n].data["L"] for n in idx], dtype=np.int64)
        both = [_canonical(sgn * h0, lam, H, list(eps)) for sgn in (1, -1)]
        for n, a, b in zip(idx, *both):
            out[n] = min(a, b)
    return out
