"""Prime table generation and the sieve-based counting oracle.

The sieve oracle is deliberately simpler than the floor-sum formulas it is
used to verify: counting primes from an Eratosthenes bit map involves no
inclusion-exclusion at all, so agreement between the two routes is meaningful.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .errors import SieveBudgetError, TableTooSmallError

DEFAULT_MAX_SIEVE_BITS = 10**8
MAX_SIEVE_ENV = "PRIMEPI_MAX_SIEVE"


def max_sieve_bits() -> int:
    """Sieve budget in bits (one bit per candidate integer).

    Read from the PRIMEPI_MAX_SIEVE environment variable; defaults to 10^8.
    """
    raw = os.environ.get(MAX_SIEVE_ENV)
    if raw is None:
        return DEFAULT_MAX_SIEVE_BITS
    try:
        bits = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_SIEVE_ENV} must be an integer, got {raw!r}") from None
    if bits < 2:
        raise ValueError(f"{MAX_SIEVE_ENV} must be at least 2, got {bits}")
    return bits


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Immutable ordered sequence of all primes up to ``limit``.

    ``primes`` is a sorted int64 array (2, 3, 5, ...); access is 1-indexed via
    :meth:`nth_prime` so that p_1 = 2. Construction is single-threaded; a
    built table is safe to share across concurrent readers.
    """

    limit: int
    primes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return int(self.primes.shape[0])

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit}, count={len(self)})"

    def nth_prime(self, n: int) -> int:
        """Return p_n, 1-indexed (p_1 = 2)."""
        if n < 1:
            raise ValueError(f"prime index must be >= 1, got {n}")
        if n > len(self):
            raise TableTooSmallError(
                f"table up to {self.limit} holds {len(self)} primes, need p_{n}"
            )
        return int(self.primes[n - 1])

    def pi_sieve(self, x: int) -> int:
        """Count primes <= x by rank lookup; the ground-truth oracle."""
        if x < 0:
            raise ValueError(f"x must be non-negative, got {x}")
        if x > self.limit:
            raise TableTooSmallError(f"x={x} exceeds sieve limit {self.limit}")
        return int(np.searchsorted(self.primes, x, side="right"))

    def pi_sieve_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized pi_sieve for a sorted or unsorted integer array."""
        xs = np.asarray(xs)
        if xs.size and (int(xs.min()) < 0 or int(xs.max()) > self.limit):
            raise TableTooSmallError(f"values outside [0, {self.limit}]")
        return np.searchsorted(self.primes, xs, side="right")

    def is_prime(self, x: int) -> bool:
        if x < 0 or x > self.limit:
            raise TableTooSmallError(f"x={x} outside sieve range [0, {self.limit}]")
        i = int(np.searchsorted(self.primes, x))
        return i < len(self) and int(self.primes[i]) == x

    def count_primes_with_square_leq(self, x: int) -> int:
        """Count primes p with p*p <= x.

        Requires the table to contain every prime up to sqrt(x).
        """
        if x < 0:
            raise ValueError(f"x must be non-negative, got {x}")
        root = isqrt(x)
        if root > self.limit:
            raise TableTooSmallError(
                f"need primes up to {root}, table stops at {self.limit}"
            )
        return int(np.searchsorted(self.primes, root, side="right"))


def generate_primes(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes over [2, limit], returning an immutable table.

    The nominal cost is one bit per integer up to ``limit``; requests above
    the PRIMEPI_MAX_SIEVE budget fail loudly instead of swapping.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    budget = max_sieve_bits()
    if limit > budget:
        raise SieveBudgetError(
            f"sieve to {limit} exceeds {MAX_SIEVE_ENV}={budget} bits"
        )
    # Odds-only sieve: flags[i] tracks 2*i + 1; index 0 (the number 1) is off.
    half = (limit - 1) // 2
    flags = np.ones(half + 1, dtype=bool)
    flags[0] = False
    for i in range(1, (isqrt(limit) - 1) // 2 + 1):
        if flags[i]:
            p = 2 * i + 1
            flags[(p * p - 1) // 2 :: p] = False
    odds = 2 * np.nonzero(flags)[0].astype(np.int64) + 1
    primes = np.concatenate((np.array([2], dtype=np.int64), odds))
    primes.setflags(write=False)
    return PrimeTable(limit=limit, primes=primes)


def table_with_at_least(count: int, start_limit: int = 64) -> PrimeTable:
    """Smallest-effort table holding at least ``count`` primes."""
    limit = max(start_limit, 3)
    while True:
        table = generate_primes(limit)
        if len(table) >= count:
            return table
        limit *= 2
