from math import isqrt

import pytest

from primepi import generate_primes, pi_range, sigma_vector


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # First use of the compiled walkers pays the JIT/cache-load cost; pay it
    # here so timed tests and hypothesis deadlines see steady-state speed.
    table = generate_primes(100)
    sigma_vector(4, 100, table)
    pi_range(50, table)


@pytest.fixture(scope="session")
def table_2k():
    return generate_primes(2000)


@pytest.fixture(scope="session")
def table_100():
    return generate_primes(100)


def trial_division_primes(limit: int) -> list[int]:
    """Independent primality oracle: no sieve, no shared code with the package."""
    found = []
    for k in range(2, limit + 1):
        if all(k % d != 0 for d in range(2, isqrt(k) + 1)):
            found.append(k)
    return found
