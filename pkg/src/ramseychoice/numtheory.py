"""Exact number-theoretic primitives.

Everything here is deterministic: primality uses a fixed strong-pseudoprime
base battery that is exact far beyond 63 bits, and the prime searches scan
candidate ranges directly instead of sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceeded, EmptyResult

# Witness battery: the first twelve primes decide primality correctly for
# every n < 3.3e24, which covers the whole supported 63-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_MAX_INPUT = 2**63

# Default ceiling for Goldbach triple searches; desk-scale work stays far below.
GOLDBACH_SEARCH_BOUND = 1_000_000


@lru_cache(maxsize=1 << 18)
def is_prime(x: int) -> bool:
    """Exact primality test for 0 <= x <= 2**63."""
    if not isinstance(x, int):
        raise ValueError(f"is_prime expects an integer, got {type(x).__name__}")
    if x < 0 or x > _MAX_INPUT:
        raise ValueError(f"is_prime supports 0 <= x <= 2**63, got {x}")
    if x < 2:
        return False
    for p in _MR_BASES:
        if x == p:
            return True
        if x % p == 0:
            return False
    # Strong-pseudoprime rounds; x is odd and coprime to every base here.
    d = x - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(r - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two non-negative integers; gcd(0, 0) = 0."""
    if a < 0 or b < 0:
        raise ValueError("gcd expects non-negative arguments")
    return math.gcd(a, b)


def bertrand_prime(m: int) -> int:
    """Smallest prime p with m < p < 2m, which exists for every m >= 2."""
    if m < 2:
        raise ValueError(f"bertrand_prime needs m >= 2, got {m}")
    for candidate in range(m + 1, 2 * m):
        if is_prime(candidate):
            return candidate
    raise RuntimeError(f"no prime in ({m}, {2 * m}); this contradicts Bertrand's postulate")


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i in range(limit + 1) if flags[i])


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return ()
    # Round the sieve size up so nearby requests share one cache entry.
    padded = max(1024, 1 << (limit - 1).bit_length())
    return tuple(p for p in _sieve(padded) if p <= limit)


@dataclass(frozen=True)
class GoldbachTriple:
    """Three primes p1 <= p2 <= p3 summing to an odd target > 5."""

    p1: int
    p2: int
    p3: int
    target: int

    def __post_init__(self):
        ps = (self.p1, self.p2, self.p3)
        if not (self.p1 <= self.p2 <= self.p3):
            raise ValueError(f"triple {ps} is not sorted")
        if sum(ps) != self.target:
            raise ValueError(f"triple {ps} does not sum to {self.target}")
        if self.target % 2 == 0 or self.target <= 5:
            raise ValueError(f"target must be odd and > 5, got {self.target}")
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, self.p3)

    @property
    def all_odd(self) -> bool:
        return self.p1 != 2


def goldbach_triples(
    n: int, all_odd_preferred: bool = False, bound: int = GOLDBACH_SEARCH_BOUND
) -> list[GoldbachTriple]:
    """All prime triples p1 <= p2 <= p3 with p1 + p2 + p3 = n, lexicographic.

    With all_odd_preferred, triples avoiding the prime 2 come first (still in
    lexicographic order within each group).  An empty result would falsify the
    ternary Goldbach theorem in range and raises EmptyResult.
    """
    if n % 2 == 0 or n <= 5:
        raise ValueError(f"goldbach_triples needs an odd n > 5, got {n}")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the triple search bound {bound}")
    primes = primes_up_to(n)
    prime_set = set(primes)
    triples = []
    for i, p1 in enumerate(primes):
        if 3 * p1 > n:
            break
        for p2 in primes[i:]:
            p3 = n - p1 - p2
            if p3 < p2:
                break
            if p3 in prime_set:
                triples.append(GoldbachTriple(p1, p2, p3, n))
    if not triples:
        raise EmptyResult(f"no prime triple sums to {n}; ternary Goldbach violated in range")
    if all_odd_preferred:
        triples.sort(key=lambda t: not t.all_odd)  # stable: keeps lex order per group
    return triples
