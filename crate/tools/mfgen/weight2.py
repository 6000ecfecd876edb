"""Weight-2 newform data from elliptic curves.

Rational weight-2 newforms of squarefree conductor correspond to isogeny
classes of semistable elliptic curves.  We enumerate small Weierstrass
models, keep those whose (minimal, multiplicative-everywhere) conductor is
the target level, group them into isogeny classes by a_p fingerprints, and
check the class count against the newform dimension formula.
"""

from math import gcd

from nt import sieve, prime_divisors, dim_cusp_new

PRIMES = sieve(200)


def curve_invariants(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return c4, disc


def radical(n):
    return 1 if n == 0 else abs(prod(prime_divisors(abs(n))))


def prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def semistable_conductor(a):
    """Conductor if the model is semistable and minimal, else None.

    For p | disc with p not dividing c4 the reduction is multiplicative and
    the model is automatically minimal at p (ord_p(c4) = 0 < 4), so the
    conductor is the radical of the discriminant.
    """
    c4, disc = curve_invariants(*a)
    if disc == 0:
        return None
    for p in prime_divisors(abs(disc)):
        if c4 % p == 0:
            return None
    return radical(disc)


def ap(a, p):
    """Trace of Frobenius at p; Ogg sign convention at bad primes."""
    a1, a2, a3, a4, a6 = (x % p for x in a)
    _, disc = curve_invariants(*a)
    good = disc % p != 0
    count = 0  # smooth affine points
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0:
                if good:
                    count += 1
                else:
                    # exclude the singular point
                    dx = (3 * x * x + 2 * a2 * x + a4 - a1 * y) % p
                    dy = (2 * y + a1 * x + a3) % p
                    if dx != 0 or dy != 0:
                        count += 1
    if good:
        return p + 1 - (count + 1)
    # multiplicative: #E^ns(F_p) = p - a_p with a_p = +-1
    return p - (count + 1)


def hecke_an(ap_of, level, n_max, k=2):
    """a_n for n = 1..n_max from prime data via Hecke recurrences."""
    an = [None] * (n_max + 1)
    an[1] = 1
    for p in PRIMES:
        if p > n_max:
            break
        pe = p
        prev2, prev1 = 1, ap_of(p)
        if pe <= n_max:
            an[pe] = prev1
        while pe * p <= n_max:
            pe *= p
            if level % p == 0:
                cur = ap_of(p) * prev1
            else:
                cur = ap_of(p) * prev1 - p ** (k - 1) * prev2
            an[pe] = cur
            prev2, prev1 = prev1, cur
    # multiplicativity
    for n in range(2, n_max + 1):
        if an[n] is None:
            for p in prime_divisors(n):
                pe = 1
                m = n
                while m % p == 0:
                    m //= p
                    pe *= p
                if m > 1:
                    an[n] = an[pe] * an[m]
                    break
    return an[1:]


def find_classes(level, n_max=60):
    """All rational newform coefficient lists for S_2(level)^new."""
    expected = dim_cusp_new(level, 2)
    found = {}
    for rng in (40, 160, 400):
        for a1 in (0, 1):
            for a2 in (-1, 0, 1):
                for a3 in (0, 1):
                    for a4 in range(-rng, rng + 1):
                        for a6 in range(-rng * 6, rng * 6 + 1):
                            a = (a1, a2, a3, a4, a6)
                            if semistable_conductor(a) != level:
                                continue
                            fp = tuple(ap(a, p) for p in PRIMES if p <= 43)
                            if fp not in found:
                                found[fp] = a
        if len(found) == expected:
            break
    if len(found) != expected:
        raise RuntimeError(
            f"level {level}: found {len(found)} isogeny classes, expected {expected}"
        )
    records = []
    for fp, a in sorted(found.items(), key=lambda kv: kv[0]):
        apc = {}

        def ap_of(p, a=a, apc=apc):
            if p not in apc:
                apc[p] = ap(a, p)
            return apc[p]

        an = hecke_an(ap_of, level, n_max)
        al = {p: -an[p - 1] for p in prime_divisors(level)}
        assert all(v in (1, -1) for v in al.values())
        records.append({"level": level, "weight": 2, "an": an, "al_signs": al})
    return records


if __name__ == "__main__":
    import time

    t0 = time.time()
    for lvl in (38, 57, 114):
        recs = find_classes(lvl)
        print(f"level {lvl}: {len(recs)} classes ({time.time()-t0:.1f}s)")
        for r in recs:
            print("  an[1..10] =", r["an"][:10], "al =", r["al_signs"])
