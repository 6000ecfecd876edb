"""Shared number theory helpers for the fixture generator."""

from fractions import Fraction
from functools import lru_cache


def sieve(limit):
    """Primes up to limit inclusive."""
    bs = bytearray([1]) * (limit + 1)
    bs[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if bs[i]:
            bs[i * i :: i] = bytearray(len(bs[i * i :: i]))
    return [i for i in range(limit + 1) if bs[i]]


@lru_cache(maxsize=None)
def factorize(n):
    """Prime factorization as a tuple of (p, e) pairs."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n):
    return [p for p, _ in factorize(n)]


def divisors(n):
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def is_squarefree(n):
    return all(e == 1 for _, e in factorize(n))


def sigma_table(e, limit):
    """sigma_e(n) for n = 0..limit (index 0 unused, set to 0)."""
    tab = [0] * (limit + 1)
    for d in range(1, limit + 1):
        de = d**e
        for m in range(d, limit + 1, d):
            tab[m] += de
    return tab


def kronecker(a, n):
    """Kronecker symbol (a|n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    t = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            t = -t
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


# ---- Dimensions for Gamma_0(N), trivial character ----

def index_mu(N):
    mu = N
    for p in prime_divisors(N):
        mu = mu // p * (p + 1)
    return mu


def nu2(N):
    if N % 4 == 0:
        return 0
    out = 1
    for p in prime_divisors(N):
        if p == 2:
            continue
        out *= 1 + kronecker(-1, p)
    return out


def nu3(N):
    if N % 9 == 0:
        return 0
    out = 1
    for p in prime_divisors(N):
        if p == 3:
            continue
        out *= 1 + kronecker(-3, p)
    return out


def nu_inf(N):
    from math import gcd

    return sum(_phi(gcd(d, N // d)) for d in divisors(N))


def _phi(n):
    out = n
    for p in prime_divisors(n):
        out = out // p * (p - 1)
    return out


def genus(N):
    g = Fraction(index_mu(N), 12) - Fraction(nu2(N), 4) - Fraction(nu3(N), 3) - Fraction(nu_inf(N), 2) + 1
    assert g.denominator == 1
    return int(g)


def dim_cusp(N, k):
    """dim S_k(Gamma_0(N)) for even k >= 2."""
    assert k >= 2 and k % 2 == 0
    if k == 2:
        return genus(N)
    return (
        (k - 1) * (genus(N) - 1)
        + (k // 2 - 1) * nu_inf(N)
        + nu2(N) * (k // 4)
        + nu3(N) * (k // 3)
    )


@lru_cache(maxsize=None)
def dim_cusp_new(N, k):
    tot = dim_cusp(N, k)
    for M in divisors(N):
        if M == N:
            continue
        tot -= dim_cusp_new(M, k) * len(divisors(N // M))
    return tot


def dim_modforms(N, k):
    """dim M_k(Gamma_0(N)) for even k >= 4."""
    assert k >= 4
    return dim_cusp(N, k) + nu_inf(N)


def sturm_bound(N, k):
    """floor(k * mu / 12): forms agreeing past this index coincide."""
    return (k * index_mu(N)) // 12


if __name__ == "__main__":
    # quick self-checks
    assert genus(38) == 4 and genus(57) == 5 and genus(114) == 17
    assert dim_cusp_new(38, 2) == 2
    assert dim_cusp_new(57, 2) == 3
    assert dim_cusp_new(114, 2) == 3
    assert dim_cusp(15, 6) == 8 and dim_cusp_new(15, 6) == 4
    assert dim_cusp(57, 6) == 32
    assert dim_cusp(93, 6) == 52
    assert dim_cusp(465, 6) == 316
    assert dim_cusp(1, 12) == 1
    print("nt self-checks ok")
    print("dim_new(57,6) =", dim_cusp_new(57, 6))
    print("dim_new(93,6) =", dim_cusp_new(93, 6))
    print("dim_new(465,6) =", dim_cusp_new(465, 6))
    print("dim M6(465) =", dim_modforms(465, 6), "sturm:", sturm_bound(465, 6))
