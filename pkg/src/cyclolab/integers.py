"""Exact integer number theory: primality, factorization, orders.

All factorizations are obtained by trial division up to TRIAL_DIVISION_BOUND
followed by a deterministic Miller-Rabin test on the cofactor.  Inputs whose
factorization would need more than that raise FactorizationLimit; nothing in
this package ever falls back to probabilistic factoring.
"""

from __future__ import annotations

import functools
import math

from .errors import FactorizationLimit, NotCoprime, PrimalityError

TRIAL_DIVISION_BOUND = 10**6

# Strong-pseudoprime witnesses making Miller-Rabin deterministic below
# 3317044064679887385961981 (Sorenson-Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


@functools.lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    """Deterministic primality test for n below ~3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_BOUND:
        raise PrimalityError(f"{n} exceeds the deterministic primality bound")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@functools.lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime-exponent pairs of n >= 1 in ascending prime order."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # wheel over 30 avoids multiples of 2, 3, 5
    p = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p <= TRIAL_DIVISION_BOUND:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += increments[i]
        i = (i + 1) % 8
    if n > 1:
        if p * p > n or is_prime(n):
            out.append((n, 1))
        else:
            raise FactorizationLimit(
                f"cofactor {n} is composite with no prime factor below "
                f"{TRIAL_DIVISION_BOUND}"
            )
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def totient(n: int) -> int:
    t = n
    for p, _ in factorize(n):
        t -= t // p
    return t


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def radical(n: int) -> int:
    """Product of the distinct primes dividing n (1 for n = 1)."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def carmichael(n: int) -> int:
    """Exponent of the unit group mod n."""
    lam = 1
    for p, e in factorize(n):
        if p == 2:
            l = 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
        else:
            l = (p - 1) * p ** (e - 1)
        lam = lam * l // math.gcd(lam, l)
    return lam


def mult_order(a: int, n: int) -> int:
    """Least k >= 1 with a**k = 1 mod n.

    Works down from the factored group exponent rather than scanning, so the
    cost is a handful of modular exponentiations once the exponent has been
    factored.  Raises NotCoprime when gcd(a, n) > 1 and FactorizationLimit
    when the exponent cannot be factored within the trial-division budget.
    """
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    order = carmichael(n)
    a %= n
    for q in prime_factors(order):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def least_primitive_root(q: int) -> int:
    """Least generator of the unit group mod q, for q an odd prime power or 2 or 4."""
    phi = totient(q)
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if mult_order(g, q) == phi:
            return g
    if q in (1, 2):
        return 1
    raise ValueError(f"unit group mod {q} is not cyclic")


def primes_up_to(limit: int) -> list[int]:
    """Plain sieve of Eratosthenes; for small desk-scale enumerations."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]
