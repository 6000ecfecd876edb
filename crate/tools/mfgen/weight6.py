"""Weight-6 newform data via Eisenstein-product spans.

Strategy, per (level N, Atkin-Lehner sign class eps):

1. Build integer q-expansion rows that provably lie in M_6(Gamma_0(N)):
   E_6(dz); products of weight-2 Eisenstein combinations V_d = E_2 - d E_2(dz)
   with E_4(fz); products of generalized (quadratic-character) Eisenstein
   series whose characters cancel; triple products of V's.  Greedily select
   rows until they span (rank checked mod p against the dimension formula).

2. The eps-isotypic new cuspidal subspace is exactly the intersection of
   ker(U_p + eps(p) p^2) over p | N, inside the span: on the new subspace
   U_p acts by -eps(p) p^{k/2-1}; p-old blocks have U_p eigenvalues of
   absolute value p^{5/2}(Ramanujan rules out +-p^2), and the Eisenstein
   span has U_p eigenvalues {1, p^5}.  Kernel constraints are enforced on
   coefficients 0..C with C >= Sturm bound for M_6(N), so kernel vectors
   satisfy the operator identity exactly, as forms.

3. Diagonalize T_2 on that subspace; each irreducible factor g of its
   characteristic polynomial with a 1-dimensional eigenspace over
   K = Q[x]/(g) is a Galois orbit of newforms, and the eigenvector yields
   the exact coefficients a_n as elements of K (generator a = a_2).

Small levels run with exact Fraction linear algebra; level 465 runs a
multimodular pipeline (24-bit primes for convolutions, 30-bit working
primes for linear algebra, CRT + rational reconstruction for the outputs)
whose every reconstructed object is verified exactly afterwards.
"""

import itertools
import random
from fractions import Fraction
from math import gcd, prod

import numpy as np

from nt import (
    divisors,
    prime_divisors,
    dim_modforms,
    dim_cusp_new,
    sturm_bound,
    kronecker,
    sieve,
)

K_WEIGHT = 6

# 24-bit primes for convolution CRT (products < 2^48, sums safe in int64)
CONV_PRIMES = [16777213, 16777199, 16777183, 16777153, 16777141, 16777127,
               16777121, 16777099, 16777049, 16777027]
# 30-bit primes for working linear algebra
WORK_PRIMES = [p for p in range(2**30 - 1, 2**30 - 20000, -2)
               if all(p % q for q in sieve(40000)[1:])]


# ---------------------------------------------------------------------------
# Bernoulli numbers / polynomials and generalized Bernoulli numbers
# ---------------------------------------------------------------------------

def bernoulli_numbers(n):
    """B_0..B_n with B_1 = -1/2."""
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        c = 1  # C(m+1, j)
        for j in range(m):
            acc += c * bs[j]
            c = c * (m + 1 - j) // (j + 1)
        bs.append(-acc / (m + 1))
    return bs


_BERN = bernoulli_numbers(16)


def bernoulli_poly(k, x):
    """B_k(x) = sum C(k,j) B_j x^{k-j}."""
    acc = Fraction(0)
    c = 1
    for j in range(k + 1):
        acc += c * _BERN[j] * x ** (k - j)
        c = c * (k - j) // (j + 1)
    return acc


def gen_bernoulli(k, chi, m):
    """Generalized Bernoulli number B_{k,chi} for chi mod m."""
    return m ** (k - 1) * sum(chi(a) * bernoulli_poly(k, Fraction(a, m)) for a in range(1, m + 1))


# ---------------------------------------------------------------------------
# Integer q-expansion rows
# ---------------------------------------------------------------------------

class Rows:
    """Builders for exact integer q-expansion rows of modular forms."""

    def __init__(self, level, prec):
        self.N = level
        self.P = prec
        self.sig = {}
        for e in (1, 2, 3, 4, 5):
            tab = [0] * (prec + 1)
            for d in range(1, prec + 1):
                de = d**e
                for mm in range(d, prec + 1, d):
                    tab[mm] += de
            self.sig[e] = tab

    def e_k(self, k, d):
        """E_k(dz), normalized 1 - (2k/B_k) sum sigma_{k-1}(n) q^{dn}."""
        scale = {4: 240, 6: -504}[k]
        row = [0] * (self.P + 1)
        row[0] = 1
        s = self.sig[k - 1]
        for n in range(1, self.P // d + 1):
            row[n * d] = scale * s[n]
        return row

    def v2(self, d, e):
        """(E_2(z) - d E_2(dz)) at ez: weight 2, level de."""
        row = [0] * (self.P + 1)
        row[0] = 1 - d
        s = self.sig[1]
        for n in range(1, self.P // e + 1):
            c = -24 * s[n]
            if n % d == 0:
                c += 24 * d * s[n // d]
            row[n * e] = c
        return row

    def eis_char(self, k, chi_pair, m, shift):
        """Scaled E_k^{psi,phi}(shift*z) for quadratic/trivial characters.

        chi_pair is ("1chi", chi) for a_n = sum_{d|n} chi(d) d^{k-1} with
        constant term -B_{k,chi}/2k, or ("chi1", chi) for
        a_n = sum_{d|n} chi(n/d) d^{k-1} with constant term 0.
        The row is scaled by the constant-term denominator to stay integral.
        """
        typ, chi = chi_pair
        row_f = [Fraction(0)] * (self.P + 1)
        if typ == "1chi":
            row_f[0] = -gen_bernoulli(k, chi, m) / (2 * k)
        nmax = self.P // shift
        for n in range(1, nmax + 1):
            acc = 0
            for d in divisors(n):
                if typ == "1chi":
                    acc += chi(d) * d ** (k - 1)
                else:
                    acc += chi(n // d) * d ** (k - 1)
            row_f[n * shift] = Fraction(acc)
        den = row_f[0].denominator if typ == "1chi" else 1
        return [int(c * den) for c in row_f]


def trunc_mul_schoolbook(a, b, prec):
    """Exact product of two rows, truncated to coefficients 0..prec."""
    out = [0] * (prec + 1)
    for i, ai in enumerate(a[: prec + 1]):
        if ai:
            top = prec - i
            for j, bj in enumerate(b[: top + 1]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _pack(xs, width):
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in xs), "little")


def _unpack(n, width, count):
    nbytes = max(width * count, (n.bit_length() + 7) // 8) + 16
    raw = n.to_bytes(nbytes, "little")
    return [int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(count)]


def trunc_mul(a, b, prec):
    """Exact truncated convolution via Kronecker substitution.

    Splits into positive/negative parts so packed digits never borrow.
    """
    a = a[: prec + 1]
    b = b[: prec + 1]
    amax = max((abs(x) for x in a), default=0)
    bmax = max((abs(x) for x in b), default=0)
    if amax == 0 or bmax == 0:
        return [0] * (prec + 1)
    bound = min(len(a), len(b)) * amax * bmax
    width = (bound.bit_length() + 15) // 8 + 1
    import gmpy2

    ap = gmpy2.mpz(_pack([max(x, 0) for x in a], width))
    an = gmpy2.mpz(_pack([max(-x, 0) for x in a], width))
    bp = gmpy2.mpz(_pack([max(x, 0) for x in b], width))
    bn = gmpy2.mpz(_pack([max(-x, 0) for x in b], width))
    pos = _unpack(int(ap * bp + an * bn), width, prec + 1)
    neg = _unpack(int(ap * bn + an * bp), width, prec + 1)
    return [p - n for p, n in zip(pos, neg)]


# ---------------------------------------------------------------------------
# Candidate generation
# ---------------------------------------------------------------------------

def quad_char(m):
    """The real quadratic character mod squarefree odd m (Jacobi symbol)."""
    return lambda n, m=m: kronecker(n, m)


def catalog(N):
    """Base Eisenstein factors: (weight, char_modulus, key).

    char_modulus is the squarefree divisor m of N indexing the real
    quadratic character chi_m (m = 1: trivial).  A factor of weight a and
    character chi_m exists only when chi_m(-1) = (-1)^a.
    """
    items = []
    divs = divisors(N)
    for d in divs:
        items.append((6, 1, ("e6", d)))
        items.append((4, 1, ("e4", d)))
    for d in divs:
        if d == 1:
            continue
        for e in divisors(N // d):
            items.append((2, 1, ("v2", d, e)))
    for m in divs:
        if m == 1:
            continue
        parity = kronecker(-1, m)
        weights = (1, 3, 5) if parity == -1 else (2, 4)
        for a in weights:
            for typ in ("1chi", "chi1"):
                if a == 1 and typ == "chi1":
                    continue  # coincides with 1chi at weight 1
                for s in divisors(N // m):
                    items.append((a, m, ("gchar", m, a, typ, s)))
    return items


def char_product(masks):
    """Product of quadratic characters chi_m as a symmetric difference."""
    out = 1
    for m in masks:
        g = gcd(out, m)
        out = (out // g) * (m // g)
    return out


def candidate_descriptors(N, max_factors=4):
    """Deterministic stream of candidate products (tuples of factor keys).

    Multisets of catalog factors with total weight 6 and trivial product
    character, streamed smallest-factor-count first.
    """
    items = catalog(N)

    def rec(start, weight_left, mask, chosen, budget):
        if weight_left == 0:
            if mask == 1 and chosen:
                yield tuple(chosen)
            return
        if budget == 0:
            return
        for i in range(start, len(items)):
            w, m, key = items[i]
            if w > weight_left:
                continue
            chosen.append(key)
            yield from rec(i, weight_left - w, char_product((mask, m)), chosen, budget - 1)
            chosen.pop()

    for nf in range(1, max_factors + 1):
        for combo in rec(0, K_WEIGHT, 1, [], nf):
            if len(combo) == nf:
                yield combo


class CandidateFactory:
    def __init__(self, N, prec, extract_prec):
        self.rows = Rows(N, prec)
        self.N = N
        self.P = prec
        self.EX = extract_prec
        self.cache = {}

    def base_row(self, key):
        if key not in self.cache:
            kind = key[0]
            if kind == "e6":
                self.cache[key] = self.rows.e_k(6, key[1])
            elif kind == "e4":
                self.cache[key] = self.rows.e_k(4, key[1])
            elif kind == "v2":
                self.cache[key] = self.rows.v2(key[1], key[2])
            elif kind == "gchar":
                _, m, a, typ, s = key
                self.cache[key] = self.rows.eis_char(a, (typ, quad_char(m)), m, s)
            else:
                raise ValueError(kind)
        return self.cache[key]

    def factors(self, desc):
        return list(desc)

    def trunc_row(self, desc, prec=None):
        """Exact coefficients 0..prec of the candidate product."""
        prec = self.EX if prec is None else prec
        fs = self.factors(desc)
        row = self.base_row(fs[0])[: prec + 1]
        for f in fs[1:]:
            row = trunc_mul(row, self.base_row(f), prec)
        return row

    def full_row_mods(self, desc):
        """Per-conv-prime full row (numpy int64, length P+1)."""
        fs = self.factors(desc)
        mods = [(np.array(self.base_row(fs[0]), dtype=object) % p).astype(np.int64)
                for p in CONV_PRIMES_USED]
        for f in fs[1:]:
            bm = [(np.array(self.base_row(f), dtype=object) % p).astype(np.int64)
                  for p in CONV_PRIMES_USED]
            mods = [np.convolve(am, b)[: self.P + 1] % p
                    for (am, b, p) in zip(mods, bm, CONV_PRIMES_USED)]
        return mods


# ---------------------------------------------------------------------------
# Mod-p linear algebra (numpy int64, p < 2^30)
# ---------------------------------------------------------------------------

def rref_mod(mat, p):
    """Row-reduce mat (int64 ndarray) mod p < 2^30. Returns (rref, pivot_cols)."""
    m = mat % p
    rows, cols = m.shape
    piv_cols = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            m[nzr] = (m[nzr] - col[nzr, None] * m[r][None, :]) % p
        piv_cols.append(c)
        r += 1
    return m[:r], piv_cols


def kernel_mod(mat, p):
    """Canonical kernel basis of mat (over F_p), as rows of a matrix."""
    rref, piv = rref_mod(mat, p)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(piv):
            basis[i, c] = (-int(rref[r, f])) % p
    return basis, piv, free


class IncrementalRankMod:
    """Streaming rank tracker mod p over a fixed set of columns."""

    def __init__(self, p, ncols):
        self.p = p
        self.rows = []  # reduced rows
        self.pivots = []  # pivot col of each reduced row

    def try_add(self, row):
        p = self.p
        r = np.array(row, dtype=object) % p
        r = r.astype(np.int64)
        for rr, pc in zip(self.rows, self.pivots):
            if r[pc]:
                r = (r - r[pc] * rr) % p
        nz = np.nonzero(r)[0]
        if len(nz) == 0:
            return False
        c = int(nz[0])
        inv = pow(int(r[c]), p - 2, p)
        r = (r * inv) % p
        self.rows.append(r)
        self.pivots.append(c)
        return True

    @property
    def rank(self):
        return len(self.rows)


# ---------------------------------------------------------------------------
# Exact rational linear algebra (Fractions) for small levels
# ---------------------------------------------------------------------------

def rref_exact(mat):
    """Gauss-Jordan over Q. mat: list of lists of Fraction. Returns (rref, piv)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = None
        for i in range(r, rows):
            if m[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for j in range(rows):
            if j != r and m[j][c] != 0:
                f = m[j][c]
                m[j] = [a - f * b for a, b in zip(m[j], m[r])]
        piv_cols.append(c)
        r += 1
    return m[:r], piv_cols


def kernel_exact(mat):
    rref, piv = rref_exact(mat)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -rref[r][f]
        basis.append(v)
    return basis, piv, free


# ---------------------------------------------------------------------------
# Number field K = Q[x]/(g) arithmetic, coefficients as Fractions
# ---------------------------------------------------------------------------

class NumberField:
    def __init__(self, g_coeffs):
        """g_coeffs: integer list, constant first, monic."""
        assert g_coeffs[-1] == 1
        self.g = [Fraction(c) for c in g_coeffs]
        self.deg = len(g_coeffs) - 1

    def zero(self):
        return [Fraction(0)] * self.deg

    def one(self):
        e = self.zero()
        e[0] = Fraction(1)
        return e

    def gen(self):
        e = self.zero()
        if self.deg == 1:
            # a == -g[0]
            e[0] = -self.g[0]
        else:
            e[1] = Fraction(1)
        return e

    def from_rational(self, q):
        e = self.zero()
        e[0] = Fraction(q)
        return e

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def scal(self, q, a):
        return [q * x for x in a]

    def mul(self, a, b):
        d = self.deg
        prod_ = [Fraction(0)] * (2 * d - 1) if d > 1 else [Fraction(0)]
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod_[i + j] += ai * bj
        # reduce mod g (monic)
        for i in range(len(prod_) - 1, d - 1, -1):
            c = prod_[i]
            if c:
                prod_[i] = Fraction(0)
                for j in range(d):
                    prod_[i - d + j] -= c * self.g[j]
        return prod_[:d]

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def inv(self, a):
        """Inverse via extended Euclid in Q[x]."""
        r0, r1 = self.g[:], a[:] + [Fraction(0)]
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i] != 0:
                    return i
            return -1

        def sub_scaled(p, q, c, sh):
            out = p[:]
            while len(out) < len(q) + sh:
                out.append(Fraction(0))
            for i, qi in enumerate(q):
                if qi:
                    out[i + sh] -= c * qi
            return out

        while deg(r1) > 0:
            d0, d1 = deg(r0), deg(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = r0[d0] / r1[d1]
            r0 = sub_scaled(r0, r1, c, d0 - d1)
            s0 = sub_scaled(s0, s1, c, d0 - d1)
        if deg(r1) != 0:
            raise ZeroDivisionError("not invertible")
        c = r1[deg(r1)]
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (self.deg - len(inv))
        return inv[: self.deg]

    def div(self, a, b):
        return self.mul(a, self.inv(b))


# ---------------------------------------------------------------------------
# CRT / rational reconstruction
# ---------------------------------------------------------------------------

def crt_pair(r1, m1, r2, m2):
    inv = pow(m1 % m2, m2 - 2, m2) if _is_prime_cached(m2) else pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


_prime_cache = {}


def _is_prime_cached(n):
    if n not in _prime_cache:
        _prime_cache[n] = all(n % q for q in sieve(int(n**0.5) + 1)[0:]) if n > 3 else n in (2, 3)
    return _prime_cache[n]


def crt_list(residues, moduli):
    r, m = residues[0] % moduli[0], moduli[0]
    for r2, m2 in zip(residues[1:], moduli[1:]):
        inv = pow(m % m2, -1, m2)
        t = ((r2 - r) * inv) % m2
        r, m = r + m * t, m * m2
    return r, m


def centered(r, m):
    return r - m if r > m // 2 else r


def rational_reconstruct(r, m):
    """x = n/d with |n|, d <= sqrt(m/2), x = r mod m; None if impossible."""
    a, b = m, r % m
    pa, pb = 0, 1
    bound = int((m // 2) ** 0.5)
    while b > bound:
        q = a // b
        a, b = b, a - q * b
        pa, pb = pb, pa - q * pb
    if abs(pb) > bound or b == 0 and pb == 0:
        return None
    if pb == 0:
        return None
    f = Fraction(b, pb)
    return f


# ---------------------------------------------------------------------------
# Orbit extraction driver
# ---------------------------------------------------------------------------

class OrbitResult:
    def __init__(self, level, weight, al_signs, poly, an_K, field):
        self.level = level
        self.weight = weight
        self.al_signs = al_signs
        self.poly = poly  # int list, constant first, monic
        self.an = an_K  # list over n=0..EX of K elements (Fraction lists)
        self.field = field


def select_span(N, fac, C, p0):
    """Greedily select candidate rows spanning M_6(N) (rank certified mod p0)."""
    target = dim_modforms(N, K_WEIGHT)
    tracker = IncrementalRankMod(p0, C + 1)
    accepted = []
    for desc in candidate_descriptors(N):
        row = fac.trunc_row(desc)[: C + 1]
        if tracker.try_add(row):
            accepted.append(desc)
            if tracker.rank == target:
                break
    if tracker.rank != target:
        raise RuntimeError(f"span deficit: rank {tracker.rank} < dim {target}")
    return accepted


def eisen_a_mod(N, k, eps, n, ell, sig):
    """a_n of the twisted Eisenstein series mod ell (n >= 1), for checks."""
    acc = 0
    for d in divisors(N):
        if n % d == 0:
            e = prod(eps[p] for p in prime_divisors(d)) if d > 1 else 1
            acc += e * d ** (k // 2) * sig[n // d]
    return acc % ell
