from itertools import combinations
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primepi import EvalPoint, TableTooSmallError, generate_primes, m_max, sigma_bruteforce, sigma_vector
from primepi.sigma import _sigma_values_python


def sigma_direct(table, n, m, x):
    """Test-local oracle: plain enumeration, no pruning, no package internals."""
    firsts = [int(p) for p in table.primes[:n]]
    return sum(x // prod(c) for c in combinations(firsts, m))


# --- evaluation points ------------------------------------------------------


@pytest.mark.parametrize(
    "text, floor_value, is_integral",
    [
        ("121.0000001", 121, False),
        ("100", 100, True),
        ("0", 0, True),
        ("3.000", 3, True),
        ("3.", 3, True),
        (".5", 0, False),
        ("  42 ", 42, True),
        ("0007.25", 7, False),
    ],
)
def test_parse_decimal_strings(text, floor_value, is_integral):
    point = EvalPoint.parse(text)
    assert point.floor_value == floor_value
    assert point.is_integral == is_integral


@pytest.mark.parametrize("text", ["", ".", "-1", "+2", "1e3", "abc", "1.2.3", "nan"])
def test_parse_rejects_non_decimals(text):
    with pytest.raises(ValueError):
        EvalPoint.parse(text)


def test_from_number():
    assert EvalPoint.from_number(7).floor_value == 7
    assert EvalPoint.from_number(1.5).floor_value == 1
    assert not EvalPoint.from_number(1.5).is_integral
    assert EvalPoint.from_number(2.0).is_integral
    for bad in (-1, -0.5, float("nan"), float("inf")):
        with pytest.raises(ValueError):
            EvalPoint.from_number(bad)


def test_exceeds_uses_fractional_part():
    assert EvalPoint.parse("3.5").exceeds(3)
    assert not EvalPoint.parse("3.000").exceeds(3)
    assert EvalPoint.parse("4").exceeds(3)


# --- primorial cutoff -------------------------------------------------------


def test_m_max_examples(table_2k):
    assert m_max(100, table_2k) == 3  # 2*3*5 = 30 <= 100 < 210
    assert m_max(1, table_2k) == 0
    assert m_max(210, table_2k) == 4
    assert m_max(209, table_2k) == 3
    assert m_max(0, table_2k) == 0


def test_m_max_insufficient_table():
    tiny = generate_primes(7)  # primorial of all four primes is 210
    with pytest.raises(TableTooSmallError):
        m_max(10**6, tiny)


# --- pruned vector ----------------------------------------------------------


def test_sigma_vector_examples(table_2k):
    assert sigma_vector(2, 10, table_2k).value(1) == 8  # 10//2 + 10//3
    vec = sigma_vector(4, 100, table_2k)
    assert {m: vec.value(m) for m in range(1, 5)} == {1: 117, 2: 45, 3: 6, 4: 0}
    zero = sigma_vector(5, 0, table_2k)
    assert all(zero.value(m) == 0 for m in range(1, 6))


def test_sigma_vector_matches_direct_enumeration(table_2k):
    for n in range(1, 7):
        for x in range(0, 121):
            vec = sigma_vector(n, x, table_2k)
            for m in range(1, n + 1):
                assert vec.value(m) == sigma_direct(table_2k, n, m, x)


def test_sigma_vector_argument_errors(table_2k):
    with pytest.raises(ValueError):
        sigma_vector(0, 10, table_2k)
    with pytest.raises(TableTooSmallError):
        sigma_vector(5, 10, generate_primes(7))


def test_value_above_cutoff_is_zero(table_2k):
    vec = sigma_vector(10, 100, table_2k)
    assert vec.m_max == 3
    assert vec.value(7) == 0
    with pytest.raises(ValueError):
        vec.value(0)


def test_zero_exactly_below_minimal_product(table_2k):
    # sigma(n, m, x) = 0 iff floor(x) is below the product of the first m primes
    primorial = [1]
    for p in (2, 3, 5, 7, 11, 13, 17, 19):
        primorial.append(primorial[-1] * p)
    for x in range(0, 600, 7):
        vec = sigma_vector(8, x, table_2k)
        for m in range(1, 9):
            assert (vec.value(m) == 0) == (x < primorial[m])


# --- brute-force twin -------------------------------------------------------


def test_bruteforce_examples(table_2k):
    assert sigma_bruteforce(3, 2, 30, table_2k) == 10  # 5 + 3 + 2
    assert sigma_bruteforce(4, 4, 100, table_2k) == 0  # 100 // 210
    assert sigma_bruteforce(4, 3, 100, table_2k) == 6  # 3 + 2 + 1 + 0


def test_bruteforce_guards(table_2k):
    with pytest.raises(ValueError):
        sigma_bruteforce(3, 4, 10, table_2k)
    with pytest.raises(ValueError):
        sigma_bruteforce(3, 0, 10, table_2k)
    with pytest.raises(ValueError):
        sigma_bruteforce(25, 2, 10, table_2k)


# --- engine twins agree -----------------------------------------------------


def test_python_walker_matches_kernel(table_2k):
    for n, x in [(1, 30), (5, 1000), (8, 987), (12, 54321), (30, 100000)]:
        vec = sigma_vector(n, x, table_2k)
        primes = [int(p) for p in table_2k.primes[:n]]
        pure = _sigma_values_python(primes, x, vec.m_max)
        assert {m: pure[m] for m in range(1, vec.m_max + 1)} == vec.values


def test_unbounded_path_beyond_int64_window():
    # floor(x) * p_n no longer fits in int64, forcing the pure-Python walker
    table = generate_primes(100)
    x = 2**62
    vec = sigma_vector(2, x, table)
    assert vec.value(1) == x // 2 + x // 3
    assert vec.value(2) == x // 6


# --- properties -------------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(
    k=st.integers(min_value=0, max_value=10**6),
    frac=st.integers(min_value=1, max_value=999999),
    n=st.integers(min_value=1, max_value=10),
)
def test_depends_only_on_floor(table_2k, k, frac, n):
    exact = sigma_vector(n, k, table_2k)
    perturbed = sigma_vector(n, f"{k}.{frac:06d}", table_2k)
    assert exact.values == perturbed.values


@settings(max_examples=80, deadline=None)
@given(
    x=st.integers(min_value=0, max_value=10**5),
    n=st.integers(min_value=1, max_value=11),
    m=st.integers(min_value=1, max_value=6),
)
def test_monotone_in_x_and_n(table_2k, x, n, m):
    here = sigma_vector(n, x, table_2k).value(m)
    assert sigma_vector(n, x + 1, table_2k).value(m) >= here
    assert sigma_vector(n + 1, x, table_2k).value(m) >= here


@settings(max_examples=60, deadline=None)
@given(
    x=st.integers(min_value=0, max_value=500),
    n=st.integers(min_value=1, max_value=8),
)
def test_pruned_equals_bruteforce(table_2k, x, n):
    vec = sigma_vector(n, x, table_2k)
    for m in range(1, n + 1):
        assert vec.value(m) == sigma_bruteforce(n, m, x, table_2k)
