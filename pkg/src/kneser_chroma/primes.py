"""Primality testing and prime search in the intervals guaranteed by prime-gap theorems."""

from __future__ import annotations

import math

from .errors import NoPrimeInInterval

# Deterministic Miller-Rabin witness set for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
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


def sieve(limit: int) -> list[int]:
    """All primes <= limit by Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


def interval_upper(n: int, mode: str) -> float:
    """Right endpoint of the prime-gap interval starting at n."""
    if mode == "bertrand98":
        if n < 2:
            raise ValueError("bertrand98 mode requires n >= 2")
        return 9 * (n + 3) / 8
    if mode == "ln2":
        if n < 3275:
            raise ValueError("ln2 mode requires n >= 3275")
        return (1 + 1 / (2 * math.log(n) ** 2)) * n
    raise ValueError(f"unknown mode {mode!r}")


def find_prime_in_interval(n: int, mode: str = "bertrand98") -> int:
    """Smallest prime p with n <= p <= the mode's interval endpoint.

    A miss would falsify the cited theorem, so it raises NoPrimeInInterval
    rather than silently widening the search.
    """
    upper = interval_upper(n, mode)
    p = n
    while p <= upper:
        if is_prime(p):
            return p
        p += 1
    raise NoPrimeInInterval(f"no prime in [{n}, {upper}] (mode={mode})")
