"""Exact prime counting: pi(x), Riemann's J(x) and the gap J(x) - pi(x).

All counts use floor semantics, so real arguments (in particular the
half-odd abscissae used by the Perron experiments) are accepted.  J is
held as an exact :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, InsufficientTableError

SEGMENT_SIZE = 1_000_000
_MAX_LIMIT = 2**63 - 1


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Primes up to ``limit`` in increasing order (read-only int64 array)."""

    limit: int
    primes: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)

    def covers(self, x) -> bool:
        return math.floor(x) <= self.limit


@dataclass(frozen=True)
class JValue:
    x: float
    terms: tuple[tuple[int, int], ...]  # (k, pi(x^(1/k)))
    exact: Fraction
    approx: float


@dataclass(frozen=True)
class GapRecord:
    x: float
    gap: Fraction
    ratio_thm1: float  # gap / (sqrt(x) log log x)
    ratio_cor2: float  # gap log x / (sqrt(x) log log x)


def _small_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_primes(limit: int, segment_size: int = SEGMENT_SIZE) -> PrimeTable:
    """Segmented sieve of Eratosthenes.

    Base primes up to sqrt(limit) come from a plain sieve; the range above
    is crossed off one segment at a time, so memory stays O(segment_size).
    """
    if isinstance(limit, bool) or not isinstance(limit, (int, np.integer)):
        raise DomainError(f"limit must be an integer, got {limit!r}")
    limit = int(limit)
    if limit < 1 or limit > _MAX_LIMIT:
        raise DomainError(f"limit must be in [1, 2**63 - 1], got {limit}")

    root = math.isqrt(limit)
    base = _small_sieve(root)
    chunks = [base]
    low = root + 1
    while low <= limit:
        high = min(low + segment_size, limit + 1)  # exclusive
        mask = np.ones(high - low, dtype=bool)
        for p in base:
            p = int(p)
            start = max(p * p, -(-low // p) * p)
            if start >= high:
                continue
            mask[start - low :: p] = False
        chunks.append(np.flatnonzero(mask).astype(np.int64) + low)
        low = high
    primes = np.concatenate(chunks)
    primes.setflags(write=False)
    return PrimeTable(limit=limit, primes=primes)


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for integers n >= 0, k >= 1, by integer Newton."""
    if n < 0 or k < 1:
        raise DomainError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    # start above the root so the iteration decreases monotonically
    r = 1 << -(-n.bit_length() // k)
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def count_pi(x, table: PrimeTable) -> int:
    """Number of primes <= x."""
    if x < 0:
        raise DomainError(f"pi(x) needs x >= 0, got {x}")
    n = math.floor(x)
    if n > table.limit:
        raise InsufficientTableError(f"table limit {table.limit} < floor(x) = {n}")
    return int(np.searchsorted(table.primes, n, side="right"))


def riemann_j(x, table: PrimeTable) -> JValue:
    """J(x) = sum over prime powers p^k <= x of 1/k, exactly."""
    if x <= 1:
        raise DomainError(f"J(x) needs x > 1, got {x}")
    n = math.floor(x)
    if n > table.limit:
        raise InsufficientTableError(f"table limit {table.limit} < floor(x) = {n}")
    terms = []
    k = 1
    while True:
        r = iroot(n, k)
        if r < 2:
            break
        terms.append((k, int(np.searchsorted(table.primes, r, side="right"))))
        k += 1
    exact = sum((Fraction(c, k) for k, c in terms), Fraction(0))
    return JValue(x=x, terms=tuple(terms), exact=exact, approx=float(exact))


def j_pi_gap(x, table: PrimeTable) -> GapRecord:
    if x < 2:
        raise DomainError(f"J - pi gap needs x >= 2, got {x}")
    gap = riemann_j(x, table).exact - count_pi(x, table)
    llx = math.log(math.log(x))
    if llx <= 0:
        # x <= e: the normalisers vanish or change sign
        r1 = r2 = math.nan
    else:
        r1 = float(gap) / (math.sqrt(x) * llx)
        r2 = r1 * math.log(x)
    return GapRecord(x=x, gap=gap, ratio_thm1=r1, ratio_cor2=r2)


def prime_power_weight(n: int) -> Fraction:
    """a_n: 1/k when n = p^k for a prime p, else 0."""
    if n < 2:
        return Fraction(0)
    for k in range(n.bit_length(), 0, -1):
        r = iroot(n, k)
        if r >= 2 and r**k == n and _is_prime(r):
            return Fraction(1, k)
    return Fraction(0)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))
