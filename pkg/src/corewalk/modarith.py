"""Exact elementary number theory helpers.

Everything here is integer-only: extended gcd, modular inverses (single and
batched), integer square roots and deterministic primality testing.  No
floating point is used anywhere, so results are exact at any magnitude.
"""

from __future__ import annotations

import math
from typing import NamedTuple


class ExtendedGcdResult(NamedTuple):
    g: int
    u: int
    v: int


def egcd(a: int, b: int) -> ExtendedGcdResult:
    """Extended Euclid: (g, u, v) with u*a + v*b = g = gcd(|a|, |b|).

    The degenerate case egcd(0, 0) returns (0, 0, 1); any v would do, this
    fixes one.
    """
    if a == 0 and b == 0:
        return ExtendedGcdResult(0, 0, 1)
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return ExtendedGcdResult(old_r, old_u, old_v)


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo a prime p, normalized to 1..p-1."""
    if p < 2:
        raise ValueError(f"modulus must be at least 2, got {p}")
    r = a % p
    if r == 0:
        raise ValueError(f"{a} is not invertible modulo {p}")
    g, u, _ = egcd(r, p)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {p} (gcd {g})")
    return u % p


def inverse_range(n: int, p: int) -> list[int]:
    """Inverses of 1..n modulo a prime p in one linear pass.

    Returns a list inv with inv[k] = k^{-1} mod p for 1 <= k <= n (index 0 is
    unused).  Uses the recurrence inv[k] = -(p // k) * inv[p mod k], valid
    because p mod k is never 0 for 1 < k < p when p is prime.
    """
    if n >= p or n < 0:
        raise ValueError(f"need 0 <= n < p, got n={n}, p={p}")
    inv = [0] * (n + 1)
    if n >= 1:
        inv[1] = 1 % p
    for k in range(2, n + 1):
        q, r = divmod(p, k)
        if r == 0:
            raise ValueError(f"modulus {p} is not prime ({k} divides it)")
        inv[k] = (-q * inv[r]) % p
    return inv


def isqrt(n: int) -> int:
    """Floor of the integer square root of a nonnegative integer."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


# Strong-pseudoprime witnesses that make Miller-Rabin deterministic for all
# n < 3.3e24, which comfortably covers the supported range n < 2**63.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**63."""
    if n < 2:
        return False
    for a in _MR_WITNESSES:
        if n % a == 0:
            return n == a
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


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, in increasing order."""
    if hi < lo:
        return []
    out = []
    if lo <= 2 <= hi:
        out.append(2)
    start = max(3, lo)
    if start % 2 == 0:
        start += 1
    for n in range(start, hi + 1, 2):
        if is_prime(n):
            out.append(n)
    return out
