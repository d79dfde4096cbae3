"""Exact integer arithmetic: factorization, totient, omega, divisors, lcm.

Everything here works on Python ints, so counts never overflow. Factoring
is plain trial division, which is fine for the desk-scale moduli this
package deals with (n up to about 10**9).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Iterable, Iterator


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition, primes strictly increasing.

    The empty tuple stands for 1.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.pairs:
            if p <= last or not is_prime(p) or e < 1:
                raise ValueError(f"not a canonical factorization: {self.pairs}")
            last = p

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        result = 1
        for p, e in self.pairs:
            result *= p**e
        return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=1 << 16)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    pairs = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        pairs.append((2, e))
    f = 3
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            pairs.append((f, e))
        f += 2
    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """Return the canonical factorization of ``n`` by trial division.

    >>> factorize(360).pairs
    ((2, 3), (3, 2), (5, 1))
    """
    _check_positive(n)
    # bypass __post_init__ re-validation; trial division output is canonical
    fac = object.__new__(Factorization)
    object.__setattr__(fac, "pairs", _factor_pairs(n))
    return fac


def totient(n: int) -> int:
    """Euler's phi via the product of p**(e-1) * (p-1)."""
    _check_positive(n)
    result = 1
    for p, e in _factor_pairs(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def omega(n: int) -> int:
    """Number of distinct prime divisors; omega(1) == 0."""
    _check_positive(n)
    return len(_factor_pairs(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    _check_positive(n)
    pairs = _factor_pairs(n)
    powers = [[p**k for k in range(e + 1)] for p, e in pairs]
    out = []
    for combo in product(*powers):
        d = 1
        for q in combo:
            d *= q
        out.append(d)
    out.sort()
    return out


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def lcm_many(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("lcm_many needs at least one value")
    for v in values:
        _check_positive(v, "value")
    return reduce(lcm, values, 1)


def two_adic_valuation(n: int) -> int:
    """Exponent of 2 in ``n``."""
    _check_positive(n)
    return (n & -n).bit_length() - 1
