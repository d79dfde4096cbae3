"""Brute-force oracles shared by the tests.

These deliberately avoid the package's own helpers so a bug there cannot
hide behind the check that is supposed to catch it.
"""

from itertools import product
from math import gcd

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def brute_totient(n):
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def brute_prime_factors(n):
    """Distinct primes by testing every candidate for primality by scan."""
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_lcm(values):
    step = t = max(values)
    while any(t % v for v in values):
        t += step
    return t


def brute_additive_order(x, moduli):
    """Order by repeated addition."""
    acc = list(x)
    t = 1
    while any(acc):
        acc = [(a + b) % m for a, b, m in zip(acc, x, moduli)]
        t += 1
    return t


def brute_order_counts(moduli):
    counts = {}
    for x in product(*(range(m) for m in moduli)):
        o = brute_additive_order(x, moduli)
        counts[o] = counts.get(o, 0) + 1
    return counts


def brute_all_homs(m, n):
    """Every function Z_m -> Z_n of the form x -> a*x that is additive."""
    homs = []
    for a in range(n):
        table = [(a * x) % n for x in range(m)]
        # in Z_1 the residue 1 is 0, so its image is forced
        if table[1 % m] != a:
            continue
        if all(table[(x + y) % m] == (table[x] + table[y]) % n for x in range(m) for y in range(m)):
            homs.append(a)
    return homs


def brute_ring_homs(m, n):
    out = []
    for a in brute_all_homs(m, n):
        table = [(a * x) % n for x in range(m)]
        if all(table[(x * y) % m] == (table[x] * table[y]) % n for x in range(m) for y in range(m)):
            out.append(a)
    return out


@pytest.fixture
def oracles():
    import types

    return types.SimpleNamespace(
        totient=brute_totient,
        prime_factors=brute_prime_factors,
        divisors=brute_divisors,
        lcm=brute_lcm,
        order=brute_additive_order,
        order_counts=brute_order_counts,
        homs=brute_all_homs,
        ring_homs=brute_ring_homs,
    )
