"""Exact integer arithmetic for 64-bit inputs: primality, factorization, divisors."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache

import numpy as np

U64_LIMIT = 1 << 64
TRIAL_BOUND = 10**6

# Deterministic for every n < 3.3e24, which covers the whole 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.uint64)


@lru_cache(maxsize=1)
def _trial_primes() -> np.ndarray:
    return _sieve(TRIAL_BOUND)


def first_primes(count: int) -> list[int]:
    return [int(p) for p in _trial_primes()[:count]]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, c: int) -> int:
    """One run of Pollard's rho with Brent's cycle detection; may return n."""
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * (x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        # batched product overshot; back up one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(x - ys, n)
            if g > 1:
                break
    return g


def _split(n: int) -> int:
    """A nontrivial factor of the odd composite n."""
    c = 1
    while True:
        d = _brent(n, c)
        if 1 < d < n:
            return d
        c += 1


def factorize(m: int) -> list[int]:
    """Prime factors of ``m`` with multiplicity, ascending.

    Trial division up to 10**6 (vectorised), then Pollard-Brent on what is left.
    """
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool):
        raise TypeError(f"expected an integer, got {type(m).__name__}")
    m = int(m)
    if m < 2:
        raise ValueError(f"factorize needs m >= 2, got {m}")
    if m >= U64_LIMIT:
        raise ValueError(f"factorize is limited to m < 2**64, got {m}")

    factors: list[int] = []
    primes = _trial_primes()
    hits = primes[np.uint64(m) % primes == 0]
    for p in map(int, hits):
        while m % p == 0:
            factors.append(p)
            m //= p
    if m == 1:
        return factors

    stack = [m]
    while stack:
        k = stack.pop()
        if is_prime(k):
            factors.append(k)
            continue
        # every prime factor of k exceeds the trial bound, so k is odd
        d = _split(k)
        stack.extend((d, k // d))
    return sorted(factors)


def prime_support(m: int) -> list[int]:
    """Distinct primes dividing ``m`` (empty for m == 1)."""
    if m == 1:
        return []
    return sorted(set(factorize(m)))


def factor_powers(m: int) -> dict[int, int]:
    return dict(sorted(Counter(factorize(m)).items()))


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    divs = [1]
    if n == 1:
        return divs
    for p, e in factor_powers(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
