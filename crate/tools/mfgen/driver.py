"""Orbit extraction driver: exact path for small levels."""

import sys
import time
from fractions import Fraction
from math import lcm, prod

import sympy

from nt import divisors, prime_divisors, dim_modforms, dim_cusp_new, sturm_bound
from weight6 import (
    CandidateFactory,
    IncrementalRankMod,
    NumberField,
    OrbitResult,
    candidate_descriptors,
    kernel_exact,
    rref_exact,
    K_WEIGHT,
)

WORK_P0 = 2**30 - 35  # used only for the rank pre-screen


def integerize(vec):
    """Clear denominators and content from a rational vector."""
    den = lcm(*[f.denominator for f in vec]) if vec else 1
    ints = [int(f * den) for f in vec]
    from math import gcd

    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def charpoly_exact(X):
    m = sympy.Matrix([[sympy.Rational(f.numerator, f.denominator) for f in row] for row in X])
    return m.charpoly(sympy.Symbol("x"))


def solve_in_rowspace(W, T, ncols):
    """X with X @ W == T, where W (w x ncols) has full row rank."""
    w = len(W)
    aug = [[W[i][n] for i in range(w)] + [T[j][n] for j in range(len(T))] for n in range(ncols)]
    rref, piv = rref_exact(aug)
    assert piv[:w] == list(range(w)), "W not full row rank on these columns"
    for row in rref[w:]:
        assert all(x == 0 for x in row), "inconsistent system"
    # rows 0..w-1 of rref give solution columns
    X = [[rref[i][w + j] for i in range(w)] for j in range(len(T))]
    return X


def kernel_over_K(field, A):
    """Null space basis of square matrix A over K (entries = field elements)."""
    n = len(A)
    m = [[e[:] for e in row] for row in A]
    piv_of_col = {}
    r = 0
    for c in range(n):
        sel = None
        for i in range(r, n):
            if not field.is_zero(m[i][c]):
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, e) for e in m[r]]
        for i in range(n):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        piv_of_col[c] = r
        r += 1
    free = [c for c in range(n) if c not in piv_of_col]
    basis = []
    for f in free:
        v = [field.zero() for _ in range(n)]
        v[f] = field.one()
        for c, rr in piv_of_col.items():
            v[c] = field.scal(Fraction(-1), m[rr][f])
        basis.append(v)
    return basis


def hecke_check(field, an, level, weight, al_signs, n_top):
    """Exact consistency checks on coefficients a_0..a_{n_top} over K."""
    k1 = weight - 1
    assert field.is_zero(an[0]), "constant term nonzero"
    assert an[1] == field.one(), "not normalized"
    for p in prime_divisors(level):
        expect = field.from_rational(-al_signs[p] * p ** (weight // 2 - 1))
        assert an[p] == expect, f"Ogg fails at {p}"
    from nt import sieve

    for q in sieve(n_top):
        for n in range(1, n_top // q + 1):
            lhs = an[q * n]
            rhs = field.mul(an[q], an[n])
            if level % q != 0:
                if n % q == 0:
                    rhs = field.sub(rhs, field.scal(Fraction(q**k1), an[n // q]))
            if lhs != rhs:
                raise AssertionError(f"Hecke relation fails at q={q}, n={n}")


def extract_orbits_exact(N, eps, c_bound, ex_bound, verbose=True):
    """All newform orbits of S_6(N)^new with Atkin-Lehner signs eps.

    eps: dict prime -> +-1 covering prime_divisors(N).
    c_bound: constraint columns 0..c_bound (must exceed Sturm bound of M_6(N)).
    ex_bound: extract coefficients a_0..a_{ex_bound}.
    """
    t0 = time.time()
    ps = prime_divisors(N)
    assert sorted(eps) == ps
    C = max(c_bound, sturm_bound(N, K_WEIGHT) + 2)
    EX = max(ex_bound, C)
    P = max(max(ps) * (C + 1), 2 * EX) + 8
    fac = CandidateFactory(N, P, EX)

    # 1. span selection (rank screened mod a large prime)
    target = dim_modforms(N, K_WEIGHT)
    tracker = IncrementalRankMod(WORK_P0, C + 1)
    accepted = []
    for desc in candidate_descriptors(N):
        row = fac.trunc_row(desc)[: C + 1]
        if tracker.try_add(row):
            accepted.append(desc)
            if tracker.rank == target:
                break
    if tracker.rank != target:
        raise RuntimeError(f"span deficit at N={N}: rank {tracker.rank} < dim {target}")
    if verbose:
        print(f"[{N}] span ok: {target} rows ({time.time()-t0:.1f}s)")

    # 2. exact rows to full precision
    R = []
    for desc in accepted:
        fs = fac.factors(desc)
        from weight6 import trunc_mul

        row = fac.base_row(fs[0])[: P + 1]
        for f in fs[1:]:
            row = trunc_mul(row, fac.base_row(f), P)
        R.append(row)
    m = len(R)
    if verbose:
        print(f"[{N}] exact rows done ({time.time()-t0:.1f}s)")

    # 3. kernel of stacked U_p constraints
    lam = {p: -eps[p] * p ** (K_WEIGHT // 2 - 1) for p in ps}
    ncons = len(ps) * (C + 1)
    Bt = [[Fraction(0)] * m for _ in range(ncons)]
    for i in range(m):
        for pi, p in enumerate(ps):
            base = pi * (C + 1)
            row = R[i]
            lp = lam[p]
            for n in range(C + 1):
                Bt[base + n][i] = Fraction(row[p * n] - lp * row[n])
    kerQ, _, _ = kernel_exact(Bt)
    ker = [integerize(v) for v in kerQ]
    w = len(ker)
    if verbose:
        print(f"[{N}] eps={eps}: eigenspace dim {w} ({time.time()-t0:.1f}s)")
    if w == 0:
        return []

    # 4. T_2 matrix on the eigenspace
    Wrows = [[sum(kv[i] * R[i][n] for i in range(m) if kv[i]) for n in range(2 * C + 1)] for kv in ker]
    WI = [[Fraction(x) for x in row[: C + 1]] for row in Wrows]
    T2 = []
    for row in Wrows:
        t = [Fraction(row[2 * n] + (2 ** (K_WEIGHT - 1)) * row[n // 2] if n % 2 == 0 else row[2 * n]) for n in range(C + 1)]
        # n = 0: T_2 a_0 = a_0 + 2^{k-1} a_0
        t[0] = Fraction(row[0] + 2 ** (K_WEIGHT - 1) * row[0])
        T2.append(t)
    X = solve_in_rowspace(WI, T2, C + 1)
    if verbose:
        print(f"[{N}] T_2 matrix solved ({time.time()-t0:.1f}s)")

    # 5. orbits from irreducible factors
    cp = charpoly_exact(X)
    poly = sympy.Poly(cp.as_expr(), sympy.Symbol("x"))
    factors = sympy.factor_list(poly)[1]
    assert sum(f.degree() * e for f, e in factors) == w
    orbits = []
    for fpoly, mult in sorted(factors, key=lambda fe: (fe[0].degree(), sorted(fe[0].all_coeffs()))):
        coeffs_desc = [int(c) for c in fpoly.all_coeffs()]
        assert coeffs_desc[0] == 1, "non-monic factor: not an algebraic integer?"
        g = list(reversed(coeffs_desc))  # constant first
        field = NumberField(g)
        a = field.gen()
        # eigenvector convention: f = sum_j c_j W_j needs X^T c = a c
        XA = [[field.from_rational(X[j][i]) for j in range(w)] for i in range(w)]
        for i in range(w):
            XA[i][i] = field.sub(XA[i][i], a)
        null = kernel_over_K(field, XA)
        assert len(null) == mult, f"eigenspace dim {len(null)} != multiplicity {mult}"
        if mult != 1:
            raise RuntimeError("repeated a_2 minimal polynomial; need extra operator")
        v = null[0]
        # coefficients a_n, n = 0..EX
        an = []
        for n in range(EX + 1):
            col = [sum(kv[i] * R[i][n] for i in range(m) if kv[i]) for kv in ker]
            acc = field.zero()
            for j in range(w):
                if col[j]:
                    acc = field.add(acc, field.scal(Fraction(col[j]), v[j]))
            an.append(acc)
        inv1 = field.inv(an[1])
        an = [field.mul(x, inv1) for x in an]
        assert an[2] == a, "generator is not a_2"
        hecke_check(field, an, N, K_WEIGHT, eps, EX)
        orbits.append(OrbitResult(N, K_WEIGHT, dict(eps), g, an, field))
        if verbose:
            print(f"[{N}] orbit deg {len(g)-1}: poly {g}")
    return orbits


# ---------------------------------------------------------------------------
# Multimodular path (large levels)
# ---------------------------------------------------------------------------

import numpy as np
from math import gcd, isqrt

from weight6 import WORK_PRIMES, kernel_mod, rref_mod, trunc_mul


def matmul_mod(A, B, p):
    """(A @ B) mod p for int64 arrays with entries in [0, p), p < 2^30."""
    Ahi = A >> 15
    Alo = A & 32767
    return ((Ahi @ B) % p * 32768 + (Alo @ B)) % p


def det_mod(M, p):
    m = M.copy() % p
    n = m.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if len(nz) == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            m[[c, i]] = m[[i, c]]
            det = (-det) % p
        det = det * int(m[c, c]) % p
        inv = pow(int(m[c, c]), p - 2, p)
        m[c] = m[c] * inv % p
        for j in range(c + 1, n):
            if m[j, c]:
                m[j] = (m[j] - m[j, c] * m[c]) % p
    return det


def charpoly_mod(X, p):
    """Coefficients (constant first) of det(xI - X) mod p by interpolation."""
    w = X.shape[0]
    xs = list(range(w + 1))
    ys = []
    for x0 in xs:
        M = (-X) % p
        M[np.diag_indices(w)] = (M[np.diag_indices(w)] + x0) % p
        ys.append(det_mod(M, p))
    # Lagrange interpolation; F(x) = prod (x - xj), constant-first
    F = [1]
    for x0 in xs:
        new = [0] * (len(F) + 1)
        for i, c in enumerate(F):
            new[i] = (new[i] - x0 * c) % p
            new[i + 1] = (new[i + 1] + c) % p
        F = new
    out = [0] * (w + 1)
    for xi, yi in zip(xs, ys):
        # Q = F / (x - xi) by synthetic division (constant-first)
        Q = [0] * (len(F) - 1)
        carry = 0
        for i in range(len(F) - 1, 0, -1):
            carry = (F[i] + carry * xi) % p
            Q[i - 1] = carry
        denom = 1
        for xj in xs:
            if xj != xi:
                denom = denom * (xi - xj) % p
        scale = yi * pow(denom, p - 2, p) % p
        for i in range(w + 1):
            out[i] = (out[i] + scale * Q[i]) % p
    return out


def rational_reconstruct(r, m):
    r %= m
    if r == 0:
        return Fraction(0)
    a0, a1 = m, r
    t0, t1 = 0, 1
    bnd = isqrt(m // 2)
    while a1 > bnd:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        t0, t1 = t1, t0 - q * t1
    if a1 == 0 or t1 == 0 or abs(t1) > bnd:
        return None
    if t1 < 0:
        a1, t1 = -a1, -t1
    if gcd(a1, t1) != 1:
        return None
    return Fraction(a1, t1)


def crt_stack(residues, primes):
    """CRT a list of residues to (value mod M, M)."""
    r, m = int(residues[0]), int(primes[0])
    for r2, p2 in zip(residues[1:], primes[1:]):
        inv = pow(m % p2, -1, p2)
        t = ((int(r2) - r) % p2) * inv % p2
        r, m = r + m * t, m * p2
    return r, m


# polynomial arithmetic mod (g, p), coefficient vectors constant-first

def polymulmod(a, b, g, p):
    d = len(g) - 1
    out = [0] * (2 * d - 1 if d > 1 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(d):
                out[i - d + j] = (out[i - d + j] - c * g[j]) % p
    return out[:d]


def polyinvmod(a, g, p):
    """Inverse of a in F_p[x]/(g); None if gcd(a, g) != 1."""
    def pdeg(u):
        for i in range(len(u) - 1, -1, -1):
            if u[i] % p:
                return i
        return -1

    r0, r1 = [c % p for c in g], [c % p for c in a] + [0]
    s0, s1 = [0], [1]
    while pdeg(r1) > 0:
        d0, d1 = pdeg(r0), pdeg(r1)
        if d0 < d1:
            r0, r1, s0, s1 = r1, r0, s1, s0
            continue
        c = r0[d0] * pow(r1[d1], p - 2, p) % p
        sh = d0 - d1
        r0 = r0 + [0] * max(0, len(r1) + sh - len(r0))
        for i, x in enumerate(r1):
            r0[i + sh] = (r0[i + sh] - c * x) % p
        s0 = s0 + [0] * max(0, len(s1) + sh - len(s0))
        for i, x in enumerate(s1):
            s0[i + sh] = (s0[i + sh] - c * x) % p
    if pdeg(r1) != 0:
        return None
    inv_lead = pow(r1[pdeg(r1)], p - 2, p)
    out = [(x * inv_lead) % p for x in s1]
    out += [0] * (len(g) - 1 - len(out))
    return out[: len(g) - 1]


class ModRun:
    """Per-prime pipeline data."""

    def __init__(self, p, ker, piv, free, X, cp):
        self.p = p
        self.ker = ker
        self.piv = piv
        self.free = free
        self.X = X
        self.cp = cp


def kernel_vector_mod_field(M, g, p):
    """A kernel vector of M over the ring F_p[x]/(g) by Gaussian elimination.

    Raises ArithmeticError when a pivot is a zero divisor (unlucky prime).
    M: w x w list of coefficient lists.  Returns (vector, nullity).
    """
    w = len(M)
    d = len(g) - 1
    gp = [c % p for c in g]
    m = [[e[:] for e in row] for row in M]

    def is_zero(e):
        return all(c % p == 0 for c in e)

    piv_of_col = {}
    r = 0
    for c in range(w):
        sel = None
        for i in range(r, w):
            if not is_zero(m[i][c]):
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = polyinvmod(m[r][c], gp, p)
        if inv is None:
            raise ArithmeticError("pivot not invertible")
        m[r] = [polymulmod(inv, e, gp, p) for e in m[r]]
        for i in range(w):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [
                    [(x - y) % p for x, y in zip(a, polymulmod(f, b, gp, p))]
                    for a, b in zip(m[i], m[r])
                ]
        piv_of_col[c] = r
        r += 1
    free = [c for c in range(w) if c not in piv_of_col]
    if not free:
        return None, 0
    f0 = free[0]
    v = [[0] * d for _ in range(w)]
    v[f0] = [1] + [0] * (d - 1)
    for c, rr in piv_of_col.items():
        v[c] = [(-x) % p for x in m[rr][f0]]
    return v, len(free)


def extract_orbits_modular(N, eps, c_bound, ex_bound, verbose=True, nprimes=14):
    t0 = time.time()
    ps = prime_divisors(N)
    assert sorted(eps) == ps
    C = max(c_bound, sturm_bound(N, K_WEIGHT) + 2)
    EX = ex_bound
    EXT = max(2 * C, EX)
    P = max(ps) * (C + 1) + 8
    fac = CandidateFactory(N, P, EXT)

    # 1. span selection, rank screened mod a work prime
    target = dim_modforms(N, K_WEIGHT)
    tracker = IncrementalRankMod(WORK_PRIMES[0], C + 1)
    accepted = []
    tested = 0
    for desc in candidate_descriptors(N):
        tested += 1
        row = fac.trunc_row(desc, C)
        if tracker.try_add(row):
            accepted.append(desc)
            if tracker.rank == target:
                break
    if tracker.rank != target:
        raise RuntimeError(f"span deficit at N={N}: rank {tracker.rank} < dim {target} (tested {tested})")
    if verbose:
        print(f"[{N}] span ok: {target} rows of {tested} tested ({time.time()-t0:.1f}s)", flush=True)

    # 2. exact rows to full precision
    R = []
    for idx, desc in enumerate(accepted):
        fs = fac.factors(desc)
        row = fac.base_row(fs[0])[: P + 1]
        for f in fs[1:]:
            row = trunc_mul(row, fac.base_row(f), P)
        R.append(row)
        if verbose and idx % 40 == 39:
            print(f"[{N}] rows {idx+1}/{target} ({time.time()-t0:.1f}s)", flush=True)
    m = len(R)
    if verbose:
        print(f"[{N}] exact rows done ({time.time()-t0:.1f}s)", flush=True)

    # 3. exact constraint matrix
    lam = {p: -eps[p] * p ** (K_WEIGHT // 2 - 1) for p in ps}
    B = []
    for i in range(m):
        row = R[i]
        brow = []
        for p in ps:
            lp = lam[p]
            brow.extend(row[p * n] - lp * row[n] for n in range(C + 1))
        B.append(brow)
    Rext = [row[: EXT + 1] for row in R]
    del R
    if verbose:
        print(f"[{N}] constraints built ({time.time()-t0:.1f}s)", flush=True)

    # 4. per-prime runs (lazily extendable)
    state = {"structure": None, "iter": iter(WORK_PRIMES)}
    runs = []

    def make_run():
        while True:
            p = next(state["iter"])
            Bp = np.array([[x % p for x in row] for row in B], dtype=np.int64)
            ker, piv, free = kernel_mod(Bp.T, p)
            if state["structure"] is None:
                state["structure"] = (tuple(piv), tuple(free))
            elif (tuple(piv), tuple(free)) != state["structure"]:
                if verbose:
                    print(f"[{N}] prime {p}: kernel structure mismatch, skipping", flush=True)
                continue
            w = len(free)
            if w == 0:
                return None
            Rp = np.array([[x % p for x in row] for row in Rext], dtype=np.int64)
            W = matmul_mod(ker % p, Rp, p)  # w x (EXT+1)
            T2W = np.zeros((w, C + 1), dtype=np.int64)
            for n in range(C + 1):
                col = W[:, 2 * n].copy()
                if n % 2 == 0:
                    col = (col + (2 ** (K_WEIGHT - 1)) * W[:, n // 2]) % p
                T2W[:, n] = col
            aug = np.concatenate([W[:, : C + 1].T, T2W.T], axis=1) % p
            rref, pivc = rref_mod(aug, p)
            if pivc[:w] != list(range(w)):
                if verbose:
                    print(f"[{N}] prime {p}: rank drop in W, skipping", flush=True)
                continue
            X = np.zeros((w, w), dtype=np.int64)
            for j in range(w):
                X[j] = rref[:w, w + j]
            for r_ in range(w, rref.shape[0]):
                assert not rref[r_, w:].any(), "inconsistent T2 solve"
            cp = charpoly_mod(X % p, p)
            run = ModRun(p, ker % p, piv, free, X, cp)
            runs.append(run)
            if verbose:
                print(f"[{N}] prime {p} done, w={w} ({time.time()-t0:.1f}s)", flush=True)
            return run

    for _ in range(nprimes):
        if make_run() is None:
            return []
    if len(runs) < 4:
        raise RuntimeError("too few good primes")
    w = len(runs[0].free)

    # 5. integer charpoly by CRT (stable + verified at the last prime)
    cp_int = None
    for upto in range(3, len(runs)):
        vals = []
        for i in range(w + 1):
            v, mod = crt_stack([r.cp[i] for r in runs[:upto]], [r.p for r in runs[:upto]])
            vals.append(centered_int(v, mod))
        if cp_int == vals:
            break
        cp_int = vals
    for r in runs:
        assert all((c - rc) % r.p == 0 for c, rc in zip(cp_int, r.cp)), "charpoly CRT unstable"
    assert cp_int[-1] == 1
    x = sympy.Symbol("x")
    poly = sympy.Poly(sum(c * x**i for i, c in enumerate(cp_int)), x)
    factors = sympy.factor_list(poly)[1]
    if verbose:
        print(f"[{N}] charpoly factors: {[(f.degree(), e) for f, e in factors]}", flush=True)

    # 6. per-orbit eigenvectors over F_p[x]/(g) and coefficient reconstruction
    orbits = []
    for fpoly, mult in sorted(factors, key=lambda fe: (fe[0].degree(), sorted(fe[0].all_coeffs()))):
        assert mult == 1, "repeated factor; need extra splitting operator"
        coeffs_desc = [int(c) for c in fpoly.all_coeffs()]
        assert coeffs_desc[0] == 1
        g = list(reversed(coeffs_desc))
        deg = len(g) - 1
        field = NumberField(g)
        a = field.gen()

        an_mods = []
        good_primes = []
        ri = 0
        while len(good_primes) < nprimes:
            if ri >= len(runs):
                if make_run() is None:
                    raise RuntimeError("prime stream exhausted")
            r = runs[ri]
            ri += 1
            p = r.p
            gp = [c % p for c in g]
            # matrix X^T - a over F_p[x]/(g)
            M = [[[int(r.X[j][i]) % p] + [0] * (deg - 1) for j in range(w)] for i in range(w)]
            for i in range(w):
                if deg >= 2:
                    M[i][i][1] = (M[i][i][1] - 1) % p
                else:
                    M[i][i][0] = (M[i][i][0] + g[0]) % p  # a = -g0
            try:
                vker, nullity = kernel_vector_mod_field(M, g, p)
            except ArithmeticError:
                continue
            assert nullity == 1, f"eigenspace dim {nullity} != 1"
            vp = np.array(vker, dtype=np.int64)  # w x deg
            Rp = np.array([[x_ % p for x_ in row[: EX + 1]] for row in Rext], dtype=np.int64)
            kercols = matmul_mod(r.ker, Rp, p)  # w x (EX+1)
            anp = matmul_mod(kercols.T % p, vp, p)  # (EX+1) x deg
            inv1 = polyinvmod(list(map(int, anp[1])), gp, p)
            if inv1 is None:
                continue
            norm = [polymulmod(list(map(int, anp[n])), inv1, gp, p) for n in range(EX + 1)]
            an_mods.append(norm)
            good_primes.append(p)
        if verbose:
            print(f"[{N}] deg {deg}: {len(good_primes)} eigen primes ({time.time()-t0:.1f}s)", flush=True)

        # rational reconstruction with held-out verification
        an = []
        hold_idx = len(good_primes) - 1
        hp = good_primes[hold_idx]
        for n in range(EX + 1):
            coeffs = []
            for ci in range(deg):
                val, mod = crt_stack(
                    [an_mods[ridx][n][ci] for ridx in range(hold_idx)], good_primes[:hold_idx]
                )
                q = rational_reconstruct(val, mod)
                assert q is not None, f"a_{n} coeff {ci} reconstruction failed; add primes"
                assert q.denominator % hp != 0
                assert (q.numerator * pow(q.denominator, hp - 2, hp) - an_mods[hold_idx][n][ci]) % hp == 0, \
                    f"a_{n} mismatch at held-out prime"
                coeffs.append(q)
            an.append(coeffs)
        assert an[2] == a, "generator is not a_2"
        hecke_check(field, an, N, K_WEIGHT, eps, EX)
        orbits.append(OrbitResult(N, K_WEIGHT, dict(eps), g, an, field))
        if verbose:
            print(f"[{N}] orbit deg {deg} ok ({time.time()-t0:.1f}s)", flush=True)
    return orbits


def centered_int(r, m):
    return r - m if r > m // 2 else r


if __name__ == "__main__":
    N = int(sys.argv[1]) if len(sys.argv) > 1 else 15
    import itertools as it

    ps = prime_divisors(N)
    total = 0
    for signs in it.product((1, -1), repeat=len(ps)):
        eps = dict(zip(ps, signs))
        orbits = extract_orbits_exact(N, eps, c_bound=30, ex_bound=60)
        total += sum(len(o.poly) - 1 for o in orbits)
        for o in orbits:
            pref = [tuple(x) for x in o.an[1:8]]
            print(f"  eps={eps} deg={len(o.poly)-1} an[1..7]={pref}")
    print("total new dim found:", total, "expected:", dim_cusp_new(N, 6))
