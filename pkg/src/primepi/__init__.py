"""Exact prime counting from symmetric floor sums over prime subsets.

The package computes pi(x), the number of primes <= x, exactly for real
x >= 0, by combining floor sums over products of distinct primes with a
binomial-corrected recursion, and verifies every result against an
independent Eratosthenes sieve oracle.
"""

from .errors import InternalConsistencyError, SieveBudgetError, TableTooSmallError
from .gamma_upsilon import (
    GammaVector,
    UpsilonResult,
    gamma_vector,
    upsilon,
    upsilon_alternating,
)
from .pi_exact import (
    BaseCase,
    CheckBlock,
    IntervalSelection,
    Mismatch,
    PiValue,
    UpsilonMethod,
    VerificationReport,
    pi_exact,
    pi_range,
    select_n,
    verify_overlap,
    verify_theorem,
)
from .primes import PrimeTable, generate_primes, max_sieve_bits, table_with_at_least
from .sigma import (
    EvalPoint,
    SigmaVector,
    as_eval_point,
    m_max,
    sigma_bruteforce,
    sigma_vector,
)

__version__ = "0.1.0"

__all__ = [
    "BaseCase",
    "CheckBlock",
    "EvalPoint",
    "GammaVector",
    "IntervalSelection",
    "InternalConsistencyError",
    "Mismatch",
    "PiValue",
    "PrimeTable",
    "SieveBudgetError",
    "SigmaVector",
    "TableTooSmallError",
    "UpsilonMethod",
    "UpsilonResult",
    "VerificationReport",
    "as_eval_point",
    "gamma_vector",
    "generate_primes",
    "m_max",
    "max_sieve_bits",
    "pi_exact",
    "pi_range",
    "select_n",
    "sigma_bruteforce",
    "sigma_vector",
    "table_with_at_least",
    "upsilon",
    "upsilon_alternating",
    "verify_overlap",
    "verify_theorem",
]
