"""Integer helpers: primality, factoring, orders, Mobius.

Everything here is exact integer arithmetic on numbers that fit
comfortably in Python ints; the largest inputs are Mersenne numbers
2^d - 1 with d <= 64.
"""

from __future__ import annotations

import math
from functools import reduce

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Witness set proven sufficient for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorize_int(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; factorize_int(1) == {}."""
    if n < 1:
        raise ValueError("factorize_int expects n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    ds = [1]
    for p, e in factorize_int(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def euler_phi(n: int) -> int:
    phi = n
    for p in factorize_int(n):
        phi -= phi // p
    return phi


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    return len(factorize_int(n))


def mobius(n: int) -> int:
    f = factorize_int(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def squarefree_part(n: int) -> int:
    """Product of the distinct primes dividing n (radical); 1 for n=1."""
    return reduce(lambda a, p: a * p, factorize_int(n), 1)


def multiplicative_order(a: int, n: int) -> int:
    """Least e >= 1 with a^e = 1 mod n; requires gcd(a, n) = 1."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1, order undefined")
    if n == 1:
        return 1
    e = euler_phi(n)
    for p in factorize_int(e):
        while e % p == 0 and pow(a, e // p, n) == 1:
            e //= p
    return e


def primes_upto(n: int) -> list[int]:
    """All primes <= n by plain sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]
