"""Binomial-corrected coefficients gamma and the counting expression built on them.

Starting from the floor sums sigma(n, m, x), the gamma family is defined by a
downward recursion:

    gamma(n, n, x) = sigma(n, n, x)
    gamma(n, m, x) = sigma(n, m, x) - sum_{k=m+1..n} C(k, m) * gamma(n, k, x)

and the counting expression combines them as

    upsilon(n, x) = floor(x) - sigma(n, 1, x)
                    + sum_{k=2..n} (k - 1) * gamma(n, k, x)
                    + n - 1.

On the open interval (p_n, p_{n+1}^2) this equals the number of primes <= x;
elsewhere it is still well defined but carries no counting claim.

Every sigma with subset size above the primorial cutoff is zero, so the
recursion gives gamma(n, m, x) = 0 for all m above the cutoff by downward
induction from the base. The implementation therefore only iterates m up to
the cutoff; the tail lemma itself is exercised against the unshortcut
recursion in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InternalConsistencyError, TableTooSmallError
from .primes import PrimeTable
from .sigma import EvalPoint, SigmaVector, as_eval_point, sigma_vector

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class GammaVector:
    """Signed values gamma(n, m, x) for m = 2..n; zeros above the cutoff."""

    n: int
    x: EvalPoint
    values: dict[int, int]

    def value(self, m: int) -> int:
        if m < 2 or m > self.n:
            raise ValueError(f"m must be in [2, {self.n}], got {m}")
        return self.values.get(m, 0)

    def weighted_sum(self) -> int:
        """sum of (k - 1) * gamma(n, k, x) over k = 2..n."""
        return sum((k - 1) * v for k, v in self.values.items())


@dataclass(frozen=True)
class UpsilonResult:
    """Value plus the term breakdown that recombines to it."""

    n: int
    x: EvalPoint
    value: int
    floor_term: int
    sigma1: int
    weighted_gamma: int
    constant: int


def _gamma_from_sigma(sig: SigmaVector) -> dict[int, int]:
    cap = sig.m_max
    gamma: dict[int, int] = {}
    for m in range(cap, 1, -1):
        total = sig.value(m)
        for k in range(m + 1, cap + 1):
            total -= comb(k, m) * gamma[k]
        gamma[m] = total
    return gamma


def gamma_vector(
    n: int, x: "EvalPoint | int | float | str", table: PrimeTable
) -> GammaVector:
    """Evaluate the downward recursion exactly, in unbounded integers."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > len(table):
        raise TableTooSmallError(f"table holds {len(table)} primes, need {n}")
    sig = sigma_vector(n, x, table)
    return GammaVector(n=n, x=sig.x, values=_gamma_from_sigma(sig))


def upsilon(
    n: int, x: "EvalPoint | int | float | str", table: PrimeTable
) -> UpsilonResult:
    """Evaluate the counting expression with its term breakdown."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > len(table):
        raise TableTooSmallError(f"table holds {len(table)} primes, need {n}")
    sig = sigma_vector(n, x, table)
    gamma = _gamma_from_sigma(sig)
    floor_term = sig.x.floor_value
    sigma1 = sig.value(1)
    weighted = sum((k - 1) * v for k, v in gamma.items())
    constant = n - 1
    value = floor_term - sigma1 + weighted + constant
    if abs(value) > _INT64_MAX:
        # On counting intervals the result equals a prime count and sits far
        # below this bound; reaching it means the caller's (n, x) pairing is
        # producing garbage we must not hand back as a count.
        raise InternalConsistencyError(
            f"upsilon({n}, {sig.x.raw}) = {value} does not fit in 64-bit"
        )
    return UpsilonResult(
        n=n,
        x=sig.x,
        value=value,
        floor_term=floor_term,
        sigma1=sigma1,
        weighted_gamma=weighted,
        constant=constant,
    )


def upsilon_alternating(
    n: int, x: "EvalPoint | int | float | str", table: PrimeTable
) -> int:
    """Second route: floor(x) + sum_{k=1..n} (-1)^k sigma(n, k, x) + n - 1.

    Derived cross-check, validated empirically against :func:`upsilon` by the
    test suite; it shares the sigma engine but none of the gamma recursion.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > len(table):
        raise TableTooSmallError(f"table holds {len(table)} primes, need {n}")
    point = as_eval_point(x)
    sig = sigma_vector(n, point, table)
    return point.floor_value + sig.alternating_sum() + n - 1
