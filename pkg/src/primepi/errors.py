"""Exception types shared across the package."""


class TableTooSmallError(ValueError):
    """The prime table does not cover the requested range.

    Callers should regenerate the table with a larger limit and retry.
    """


class SieveBudgetError(RuntimeError):
    """A sieve request exceeded the memory budget (PRIMEPI_MAX_SIEVE bits)."""


class InternalConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
