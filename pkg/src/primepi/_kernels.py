"""Compiled depth-first enumeration kernels.

Both kernels walk the same tree: subsets of the first n table primes in
ascending index order, abandoning a branch as soon as the running product
exceeds the bound. All arithmetic is int64; callers must enforce
``bound * largest_prime < 2**63`` before dispatching here (the pure-Python
twin in :mod:`primepi.sigma` has no such ceiling).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def sigma_point(primes: np.ndarray, n: int, x: int, m_cap: int) -> np.ndarray:
    """Floor sums sigma[m] = sum(x // product) over m-subsets, m = 1..m_cap."""
    sig = np.zeros(m_cap + 1, dtype=np.int64)
    if m_cap == 0 or x <= 1:
        return sig
    next_idx = np.zeros(m_cap + 1, dtype=np.int64)
    prod = np.ones(m_cap + 1, dtype=np.int64)
    depth = 0
    next_idx[0] = 0
    while depth >= 0:
        i = next_idx[depth]
        if i >= n:
            depth -= 1
            continue
        q = prod[depth] * primes[i]
        next_idx[depth] += 1
        if q > x:
            # A product above x contributes floor(x/q) = 0, and every superset
            # grown from it has a still larger product; with primes tried in
            # ascending order the later siblings are larger too, so the whole
            # remainder of this level is exactly zero.
            depth -= 1
            continue
        sig[depth + 1] += x // q
        if depth + 1 < m_cap:
            depth += 1
            next_idx[depth] = i + 1
            prod[depth] = q
    return sig


@njit(cache=True)
def subset_divisor_marks(
    primes: np.ndarray, n: int, lo: int, hi: int, m_cap: int
) -> np.ndarray:
    """Per-size divisor counts for every x in [lo, hi].

    marks[m-1, x-lo] = number of m-subsets of the first n primes whose product
    divides x. Cumulative sums of a row recover sigma[m] increments across the
    window, since floor(x/d) - floor((x-1)/d) is 1 exactly when d divides x.
    """
    width = hi - lo + 1
    marks = np.zeros((m_cap, width), dtype=np.int64)
    if m_cap == 0 or hi <= 1:
        return marks
    next_idx = np.zeros(m_cap + 1, dtype=np.int64)
    prod = np.ones(m_cap + 1, dtype=np.int64)
    depth = 0
    next_idx[0] = 0
    while depth >= 0:
        i = next_idx[depth]
        if i >= n:
            depth -= 1
            continue
        q = prod[depth] * primes[i]
        next_idx[depth] += 1
        if q > hi:
            depth -= 1
            continue
        first = ((lo + q - 1) // q) * q
        for mult in range(first, hi + 1, q):
            marks[depth, mult - lo] += 1
        if depth + 1 < m_cap:
            depth += 1
            next_idx[depth] = i + 1
            prod[depth] = q
    return marks
