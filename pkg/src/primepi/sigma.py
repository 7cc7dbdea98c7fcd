"""Symmetric floor sums over products of distinct primes.

For n >= m >= 1 and real x >= 0,

    sigma(n, m, x) = sum over all 1 <= k_1 < ... < k_m <= n
                     of floor(x / (p_{k_1} * p_{k_2} * ... * p_{k_m}))

where p_1 = 2, p_2 = 3, ... is the ordered prime sequence. Since every term
only sees floor(x), the whole family depends on x through floor(x) alone:
floor(x/d) = floor(floor(x)/d) for any positive integer d.

Two independent routes are provided. ``sigma_vector`` prunes the subset tree
on the running product and computes all m at once; ``sigma_bruteforce``
transcribes the definition term by term with unbounded integers and exists
solely to check the pruned route.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from math import floor as _math_floor
from math import prod
from itertools import combinations

from .errors import TableTooSmallError
from .primes import PrimeTable
from . import _kernels

# Largest depth the pruned recursion can reach: the product of the first m
# primes exceeds 2**135 already at m = 40, so ~40 frames is the practical
# ceiling for any input this package will ever see.
_RECURSION_HEADROOM = 200

_DECIMAL_RE = re.compile(r"(\d*)(?:\.(\d*))?\Z")

BRUTEFORCE_MAX_N = 24


@dataclass(frozen=True)
class EvalPoint:
    """A non-negative real evaluation point reduced to its integer floor.

    ``raw`` keeps the input as given; ``floor_value`` is extracted from the
    decimal text by truncation, never through binary floating point, so
    inputs like "121.0000001" floor exactly.
    """

    raw: str
    floor_value: int
    is_integral: bool

    @classmethod
    def parse(cls, text: str) -> "EvalPoint":
        stripped = text.strip()
        match = _DECIMAL_RE.fullmatch(stripped)
        if not match or stripped in ("", "."):
            raise ValueError(f"not a non-negative decimal: {text!r}")
        int_part, frac_part = match.group(1), match.group(2)
        floor_value = int(int_part) if int_part else 0
        is_integral = not frac_part or set(frac_part) == {"0"}
        return cls(raw=stripped, floor_value=floor_value, is_integral=is_integral)

    @classmethod
    def from_number(cls, value: int | float) -> "EvalPoint":
        if isinstance(value, int):
            if value < 0:
                raise ValueError(f"evaluation point must be >= 0, got {value}")
            return cls(raw=str(value), floor_value=value, is_integral=True)
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"evaluation point must be finite, got {value}")
        if value < 0:
            raise ValueError(f"evaluation point must be >= 0, got {value}")
        fl = _math_floor(value)
        return cls(raw=repr(value), floor_value=fl, is_integral=(value == fl))

    def exceeds(self, bound: int) -> bool:
        """True when the underlying real value is strictly greater than bound."""
        if self.floor_value != bound:
            return self.floor_value > bound
        return not self.is_integral


def as_eval_point(x: "EvalPoint | int | float | str") -> EvalPoint:
    if isinstance(x, EvalPoint):
        return x
    if isinstance(x, str):
        return EvalPoint.parse(x)
    return EvalPoint.from_number(x)


def m_max(x: "EvalPoint | int | float | str", table: PrimeTable) -> int:
    """Largest m with p_1 * p_2 * ... * p_m <= floor(x); 0 when floor(x) < 2.

    Terms of subset size beyond this cutoff all vanish, because the smallest
    product of m distinct primes is the product of the first m.
    """
    fl = as_eval_point(x).floor_value
    running = 1
    m = 0
    for p in table.primes:
        running *= int(p)
        if running > fl:
            return m
        m += 1
    raise TableTooSmallError(
        f"primorial of all {len(table)} table primes is still <= {fl}"
    )


def _m_cap(floor_value: int, table: PrimeTable, n: int) -> int:
    """Largest useful subset size: min over the primorial cutoff and n."""
    running = 1
    m = 0
    for i in range(n):
        running *= int(table.primes[i])
        if running > floor_value:
            return m
        m += 1
    return n


@dataclass(frozen=True)
class SigmaVector:
    """All floor sums sigma(n, m, x) for one (n, x), m = 1..m_max.

    Sizes above ``m_max`` (up to n) are zero and not stored; ``value`` hands
    them back as 0.
    """

    n: int
    x: EvalPoint
    m_max: int
    values: dict[int, int]

    def value(self, m: int) -> int:
        if m < 1:
            raise ValueError(f"subset size must be >= 1, got {m}")
        return self.values.get(m, 0)

    def alternating_sum(self) -> int:
        """sum of (-1)^m * sigma(n, m, x) over m = 1..n."""
        return sum((-1 if m % 2 else 1) * v for m, v in self.values.items())


def _sigma_values_python(primes: list[int], x: int, m_cap: int) -> list[int]:
    """Pure-Python pruned traversal; unbounded integers, any input size."""
    sig = [0] * (m_cap + 1)
    n = len(primes)
    if m_cap == 0 or x <= 1:
        return sig

    sys.setrecursionlimit(max(sys.getrecursionlimit(), m_cap + _RECURSION_HEADROOM))

    def walk(start: int, running: int, size: int) -> None:
        for i in range(start, n):
            q = running * primes[i]
            if q > x:
                # floor(x/q) = 0 here, every superset's product is larger
                # still, and siblings use larger primes: nothing past this
                # point can contribute, so dropping the branch is exact.
                break
            sig[size] += x // q
            if size < m_cap:
                walk(i + 1, q, size + 1)

    walk(0, 1, 1)
    return sig


def _kernel_safe(floor_value: int, table: PrimeTable, n: int) -> bool:
    # The compiled walker probes products up to (partial product) * p and the
    # partial product never exceeds floor(x), so the largest intermediate is
    # bounded by floor(x) * p_n; keep that strictly inside int64.
    return floor_value * int(table.primes[n - 1]) < 2**63


def sigma_vector(
    n: int, x: "EvalPoint | int | float | str", table: PrimeTable
) -> SigmaVector:
    """Every sigma(n, m, x) from one pruned depth-first pass.

    The traversal visits subsets of the first n primes in ascending index
    order and accumulates x // product into the bucket for the current subset
    size, abandoning any branch whose running product exceeds floor(x).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > len(table):
        raise TableTooSmallError(f"table holds {len(table)} primes, need {n}")
    point = as_eval_point(x)
    fl = point.floor_value
    cap = _m_cap(fl, table, n)
    if cap > 0 and _kernel_safe(fl, table, n):
        sig = _kernels.sigma_point(table.primes[:n], n, fl, cap)
        values = {m: int(sig[m]) for m in range(1, cap + 1)}
    else:
        primes = [int(p) for p in table.primes[:n]]
        sig_list = _sigma_values_python(primes, fl, cap)
        values = {m: sig_list[m] for m in range(1, cap + 1)}
    return SigmaVector(n=n, x=point, m_max=cap, values=values)


def sigma_bruteforce(
    n: int, m: int, x: "EvalPoint | int | float | str", table: PrimeTable
) -> int:
    """Literal term-by-term evaluation of sigma(n, m, x); the oracle route.

    Enumerates every m-combination of the first n primes, multiplies with
    unbounded integers and sums the floors. No pruning, no shared state.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > n:
        raise ValueError(f"m={m} exceeds n={n}")
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"n={n} above brute-force guard {BRUTEFORCE_MAX_N}")
    if n > len(table):
        raise TableTooSmallError(f"table holds {len(table)} primes, need {n}")
    fl = as_eval_point(x).floor_value
    primes = [int(p) for p in table.primes[:n]]
    return sum(fl // prod(combo) for combo in combinations(primes, m))
