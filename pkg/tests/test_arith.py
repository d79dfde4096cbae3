from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from homcount.arith import (
    Factorization,
    divisors,
    factorize,
    lcm_many,
    omega,
    totient,
    two_adic_valuation,
)


@pytest.mark.parametrize("n, pairs", [
    (1, ()),
    (360, ((2, 3), (3, 2), (5, 1))),
    (97, ((97, 1),)),
])
def test_factorize_examples(n, pairs):
    assert factorize(n).pairs == pairs


@pytest.mark.parametrize("n, phi", [(1, 1), (12, 4), (18, 6)])
def test_totient_examples(n, phi):
    assert totient(n) == phi


@pytest.mark.parametrize("n, w", [(1, 0), (6, 2), (360, 3)])
def test_omega_examples(n, w):
    assert omega(n) == w


@pytest.mark.parametrize("n, ds", [(1, [1]), (6, [1, 2, 3, 6]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors_examples(n, ds):
    assert divisors(n) == ds


@pytest.mark.parametrize("values, expected", [([4, 6], 12), ([1, 1, 1], 1), ([2, 3, 5], 30)])
def test_lcm_many_examples(values, expected):
    assert lcm_many(values) == expected


@pytest.mark.parametrize("n, v", [(1, 0), (24, 3), (6, 1)])
def test_two_adic_valuation_examples(n, v):
    assert two_adic_valuation(n) == v


@pytest.mark.parametrize("fn", [factorize, totient, omega, divisors, two_adic_valuation])
def test_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_lcm_many_rejects_empty_and_zero():
    with pytest.raises(ValueError):
        lcm_many([])
    with pytest.raises(ValueError):
        lcm_many([3, 0])


def test_non_int_rejected():
    with pytest.raises(TypeError):
        totient(4.0)


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((4, 1),))
    assert Factorization(((2, 2), (3, 1))).value() == 12


def test_reconstruction_up_to_a_million():
    for n in range(1, 10**6 + 1, 7):
        assert factorize(n).value() == n
    for n in range(10**6 - 2000, 10**6 + 1):
        assert prod(p**e for p, e in factorize(n)) == n


def test_factorization_primes_against_oracle(oracles):
    for n in range(1, 2000):
        assert list(factorize(n).primes) == oracles.prime_factors(n)
        assert omega(n) == len(factorize(n))


def test_totient_matches_gcd_count(oracles):
    for n in range(1, 10**4 + 1):
        assert totient(n) == oracles.totient(n)


def test_divisor_sum_identity():
    for n in range(1, 10**4 + 1):
        assert sum(totient(d) for d in divisors(n)) == n


def test_divisors_against_scan(oracles):
    for n in range(1, 1500):
        assert divisors(n) == oracles.divisors(n)


def test_totient_multiplicative_on_coprime_pairs():
    for a in range(1, 101):
        for b in range(1, 101):
            if gcd(a, b) == 1:
                assert totient(a * b) == totient(a) * totient(b)


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_totient_multiplicative_property(a, b):
    if gcd(a, b) == 1:
        assert totient(a * b) == totient(a) * totient(b)


@given(st.lists(st.integers(1, 60), min_size=1, max_size=4))
def test_lcm_many_against_brute_force(values):
    step = t = max(values)
    while any(t % v for v in values):
        t += step
    assert lcm_many(values) == t


@given(st.integers(1, 2**40))
def test_two_adic_valuation_by_halving(n):
    t, m = 0, n
    while m % 2 == 0:
        m //= 2
        t += 1
    assert two_adic_valuation(n) == t


def test_large_values_do_not_overflow():
    p = 999_999_937  # largest prime below 10**9
    assert totient(p) == p - 1
    assert totient(2**64) == 2**63
    assert totient(p * 2**80) == (p - 1) * 2**79
