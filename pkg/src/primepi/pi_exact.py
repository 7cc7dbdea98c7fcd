"""Exact prime counting for real x >= 0, plus verification sweeps.

The count is piecewise:

    pi(x) = 0                 if x < 2
            1                 if 2 <= x < 3
            2                 if x = 3
            upsilon(n, x)     if p_n < x < p_{n+1}^2, n >= 2

Any n whose open interval contains x is admissible; this module always picks
the smallest one, n = max(2, #{p prime : p^2 <= floor(x)}), which minimizes
the subset enumeration cost. ``verify_overlap`` checks that the choice is
immaterial where consecutive intervals intersect, and ``verify_theorem``
checks the counting claim itself against the sieve oracle.

The formula path only ever sieves up to about sqrt(x); only the oracle used
by the verification sweeps needs primes all the way up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, isqrt
from typing import Callable

import numpy as np

from . import _kernels
from .errors import InternalConsistencyError, TableTooSmallError
from .gamma_upsilon import UpsilonResult, upsilon
from .primes import PrimeTable, generate_primes, table_with_at_least
from .sigma import EvalPoint, as_eval_point, sigma_vector, _m_cap

PiOracle = Callable[[int], int]


@dataclass(frozen=True)
class IntervalSelection:
    """An admissible open interval (p_n, p_{n+1}^2) and its index n."""

    n: int
    lower: int
    upper: int

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ValueError(f"degenerate interval ({self.lower}, {self.upper})")

    def contains(self, x: "EvalPoint | int | float | str") -> bool:
        point = as_eval_point(x)
        return point.exceeds(self.lower) and point.floor_value < self.upper


@dataclass(frozen=True)
class BaseCase:
    """Provenance tag for the three explicit branches below 4."""

    branch: str  # "x<2" | "2<=x<3" | "x=3"


@dataclass(frozen=True)
class UpsilonMethod:
    """Provenance tag for the formula branch."""

    selection: IntervalSelection
    detail: UpsilonResult


@dataclass(frozen=True)
class PiValue:
    x: EvalPoint
    value: int
    method: BaseCase | UpsilonMethod

    @property
    def n_used(self) -> int | str:
        if isinstance(self.method, UpsilonMethod):
            return self.method.selection.n
        return "base"


def select_n(x: "EvalPoint | int | float | str", table: PrimeTable) -> IntervalSelection:
    """Smallest admissible n for x > 3: max(2, #{p : p^2 <= floor(x)}).

    With that choice p_n <= sqrt(x) < x and p_{n+1} > sqrt(x), so the open
    interval (p_n, p_{n+1}^2) strictly contains x; squares of primes land in
    the next interval up, keeping containment strict at the boundaries.
    """
    point = as_eval_point(x)
    if not point.exceeds(3):
        raise ValueError(f"interval selection needs x > 3, got {point.raw}")
    n = max(2, table.count_primes_with_square_leq(point.floor_value))
    selection = IntervalSelection(
        n=n, lower=table.nth_prime(n), upper=table.nth_prime(n + 1) ** 2
    )
    if not selection.contains(point):
        raise InternalConsistencyError(
            f"selected interval ({selection.lower}, {selection.upper}) misses {point.raw}"
        )
    return selection


def _auto_table(floor_value: int) -> PrimeTable:
    # 2*(sqrt+1) leaves room for the next prime past sqrt(x) (Bertrand), which
    # the interval upper bound needs; the doubling loop is a safety net only.
    limit = max(7, 2 * (isqrt(floor_value) + 1))
    table = generate_primes(limit)
    while len(table) < max(2, table.count_primes_with_square_leq(floor_value)) + 1:
        limit *= 2
        table = generate_primes(limit)
    return table


def pi_exact(
    x: "EvalPoint | int | float | str", table: PrimeTable | None = None
) -> PiValue:
    """Count primes <= x exactly, for any real x >= 0.

    When ``table`` is omitted a table is sized automatically (primes up to
    roughly 2*sqrt(x)). A supplied table must cover sqrt(x) and one prime
    beyond, or TableTooSmallError is raised.
    """
    point = as_eval_point(x)
    fl = point.floor_value
    if fl <= 1:
        return PiValue(x=point, value=0, method=BaseCase("x<2"))
    if fl == 2:
        return PiValue(x=point, value=1, method=BaseCase("2<=x<3"))
    if fl == 3 and point.is_integral:
        return PiValue(x=point, value=2, method=BaseCase("x=3"))
    if table is None:
        table = _auto_table(fl)
    selection = select_n(point, table)
    detail = upsilon(selection.n, point, table)
    return PiValue(x=point, value=detail.value, method=UpsilonMethod(selection, detail))


# ---------------------------------------------------------------------------
# Batched evaluation over a contiguous integer range
# ---------------------------------------------------------------------------


def _upsilon_block(n: int, lo: int, hi: int, table: PrimeTable) -> np.ndarray:
    """upsilon(n, x) for every integer x in [lo, hi], n held fixed.

    Same sigma -> gamma -> upsilon arithmetic as the pointwise path, but the
    subset tree is walked once for the whole window: each subset product d
    bumps sigma at its multiples, and prefix sums rebuild sigma(n, m, x) from
    the exact value at lo - 1.
    """
    cap = _m_cap(hi, table, n)
    base = sigma_vector(n, lo - 1, table)
    marks = _kernels.subset_divisor_marks(table.primes[:n], n, lo, hi, cap)
    sig = np.cumsum(marks, axis=1)
    for m in range(1, cap + 1):
        sig[m - 1] += base.value(m)
    gamma: dict[int, np.ndarray] = {}
    for m in range(cap, 1, -1):
        g = sig[m - 1].copy()
        for k in range(m + 1, cap + 1):
            g -= comb(k, m) * gamma[k]
        gamma[m] = g
    values = np.arange(lo, hi + 1, dtype=np.int64) + (n - 1)
    if cap >= 1:
        values -= sig[0]
    for k in range(2, cap + 1):
        values += (k - 1) * gamma[k]
    return values


def pi_range(hi: int, table: PrimeTable | None = None) -> np.ndarray:
    """pi(x) for every integer x in [0, hi], via per-interval batching.

    The range is split at 4 and at every prime square, inside which the
    selected n is constant; each piece is evaluated by :func:`_upsilon_block`.
    Values agree with pointwise :func:`pi_exact` everywhere.
    """
    if hi < 0:
        raise ValueError(f"hi must be >= 0, got {hi}")
    out = np.zeros(hi + 1, dtype=np.int64)
    for x, v in ((1, 0), (2, 1), (3, 2)):
        if x <= hi:
            out[x] = v
    if hi < 4:
        return out
    if table is None:
        table = _auto_table(hi)
    largest_needed = table.nth_prime(max(2, table.count_primes_with_square_leq(hi)))
    if hi * largest_needed >= 2**63:
        raise ValueError(f"hi={hi} too large for the compiled int64 walker")
    cuts = [4]
    for k in range(2, len(table) + 1):
        square = table.nth_prime(k) ** 2
        if 4 < square <= hi:
            cuts.append(square)
        if square > hi:
            break
    cuts.append(hi + 1)
    for lo, end in zip(cuts[:-1], cuts[1:]):
        n = max(2, table.count_primes_with_square_leq(lo))
        out[lo:end] = _upsilon_block(n, lo, end - 1, table)
    return out


# ---------------------------------------------------------------------------
# Verification sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    n: int
    x: int
    expected: int
    got: int


@dataclass(frozen=True)
class CheckBlock:
    """One verified interval: pass iff mismatches == 0."""

    n: int
    lower: int
    upper: int
    checked: int
    mismatches: int

    @property
    def passed(self) -> bool:
        return self.mismatches == 0


@dataclass(frozen=True)
class VerificationReport:
    kind: str  # "theorem" | "overlap"
    blocks: tuple[CheckBlock, ...]
    mismatches: tuple[Mismatch, ...]

    @property
    def total_checked(self) -> int:
        return sum(b.checked for b in self.blocks)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _theorem_table(n_max: int, table: PrimeTable | None, need_oracle: bool) -> PrimeTable:
    if table is not None:
        if len(table) < n_max + 1:
            raise TableTooSmallError(
                f"table holds {len(table)} primes, need {n_max + 1}"
            )
        upper = table.nth_prime(n_max + 1) ** 2
        if need_oracle and table.limit < upper - 1:
            raise TableTooSmallError(
                f"oracle needs sieve to {upper - 1}, table stops at {table.limit}"
            )
        return table
    bootstrap = table_with_at_least(n_max + 2)
    if not need_oracle:
        return bootstrap
    return generate_primes(bootstrap.nth_prime(n_max + 1) ** 2)


def verify_theorem(
    n_min: int,
    n_max: int,
    table: PrimeTable | None = None,
    sample: int | None = None,
    seed: int = 0,
    oracle: PiOracle | None = None,
) -> VerificationReport:
    """Compare upsilon(n, x) with the sieve count on every interval in range.

    Exhaustive mode checks every integer strictly inside (p_n, p_{n+1}^2);
    ``sample`` switches to that many uniform draws per n (seeded, so repeat
    runs check identical points). ``oracle`` replaces the sieve count, which
    lets the test suite prove the harness reports planted mismatches.
    """
    if n_min < 2:
        raise ValueError(f"n_min must be >= 2, got {n_min}")
    if n_max < n_min:
        raise ValueError(f"inverted range: n_min={n_min} > n_max={n_max}")
    if sample is not None and sample < 1:
        raise ValueError(f"sample count must be >= 1, got {sample}")
    table = _theorem_table(n_max, table, need_oracle=oracle is None)
    expected_of: PiOracle = oracle if oracle is not None else table.pi_sieve
    rng = random.Random(seed)
    blocks: list[CheckBlock] = []
    mismatches: list[Mismatch] = []
    for n in range(n_min, n_max + 1):
        lower = table.nth_prime(n)
        upper = table.nth_prime(n + 1) ** 2
        if sample is None:
            xs = range(lower + 1, upper)
        else:
            xs = sorted(rng.randrange(lower + 1, upper) for _ in range(sample))
        bad = 0
        for x in xs:
            got = upsilon(n, x, table).value
            expected = expected_of(x)
            if got != expected:
                bad += 1
                mismatches.append(Mismatch(n=n, x=x, expected=expected, got=got))
        blocks.append(
            CheckBlock(n=n, lower=lower, upper=upper, checked=len(xs), mismatches=bad)
        )
    mismatches.sort(key=lambda m: (m.n, m.x))
    return VerificationReport(
        kind="theorem", blocks=tuple(blocks), mismatches=tuple(mismatches)
    )


def verify_overlap(n: int, table: PrimeTable | None = None) -> VerificationReport:
    """Check upsilon(n, .) == upsilon(n+1, .) on the intervals' intersection.

    Consecutive admissible intervals share (p_{n+1}, p_{n+1}^2); both routes
    are computed independently for every integer inside it.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if table is None:
        table = table_with_at_least(n + 2)
    elif len(table) < n + 2:
        raise TableTooSmallError(f"table holds {len(table)} primes, need {n + 2}")
    lower = table.nth_prime(n + 1)
    upper = lower * lower
    mismatches: list[Mismatch] = []
    for x in range(lower + 1, upper):
        got = upsilon(n, x, table).value
        expected = upsilon(n + 1, x, table).value
        if got != expected:
            mismatches.append(Mismatch(n=n, x=x, expected=expected, got=got))
    block = CheckBlock(
        n=n,
        lower=lower,
        upper=upper,
        checked=upper - lower - 1,
        mismatches=len(mismatches),
    )
    return VerificationReport(
        kind="overlap", blocks=(block,), mismatches=tuple(mismatches)
    )
