"""Homomorphisms between cyclic groups and rings Z_m -> Z_n.

A group homomorphism Z_m -> Z_n is fixed by where it sends 1, and that
image ``a`` is legal exactly when ``m * a`` vanishes mod n.  A ring
homomorphism (no requirement to send 1 to 1) additionally needs ``a`` to be
idempotent.  Closed-form counts live next to the enumerations that check
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import _check_positive, omega, totient


class PreconditionError(ValueError):
    """A closed form was asked for outside the regime where it is proven."""


@dataclass(frozen=True, order=True)
class CyclicHomWitness:
    source_modulus: int
    target_modulus: int
    generator_image: int

    def __post_init__(self) -> None:
        m, n, a = self.source_modulus, self.target_modulus, self.generator_image
        if not 0 <= a < n:
            raise ValueError(f"image {a} not reduced mod {n}")
        if (m * a) % n:
            raise ValueError(f"x -> {a}x is not well defined from Z_{m} to Z_{n}")

    def __call__(self, x: int) -> int:
        return (self.generator_image * x) % self.target_modulus


@dataclass(frozen=True, order=True)
class RingHomWitness(CyclicHomWitness):
    idempotent_flag: bool = True

    def __post_init__(self) -> None:
        super().__post_init__()
        a, n = self.generator_image, self.target_modulus
        if (a * a - a) % n:
            raise ValueError(f"{a} is not idempotent mod {n}")


def _check_moduli(m: int, n: int) -> None:
    _check_positive(m, "m")
    _check_positive(n, "n")


def enumerate_group_homs(m: int, n: int) -> list[CyclicHomWitness]:
    """Every group homomorphism Z_m -> Z_n, by scanning all images of 1."""
    _check_moduli(m, n)
    return [CyclicHomWitness(m, n, a) for a in range(n) if (m * a) % n == 0]


def element_order(a: int, n: int) -> int:
    """Additive order of ``a`` in Z_n."""
    _check_positive(n)
    if not 0 <= a < n:
        raise ValueError(f"residue {a} out of range for modulus {n}")
    return n // gcd(a, n)


def count_surjective_group_homs(m: int, n: int) -> int:
    """phi(n) if n divides m, otherwise 0."""
    _check_moduli(m, n)
    if m % n:
        return 0
    return totient(n)


def surjective_homs_oracle(m: int, n: int) -> list[CyclicHomWitness]:
    """Surjective homs found by brute force: image of 1 has order n."""
    return [w for w in enumerate_group_homs(m, n) if element_order(w.generator_image, n) == n]


def image_is_everything(w: CyclicHomWitness) -> bool:
    """Surjectivity by evaluating the map on every element of the source."""
    n = w.target_modulus
    return len({w(x) for x in range(w.source_modulus)}) == n


def enumerate_idempotents(n: int) -> list[int]:
    """Residues a in [0, n) with a*a == a mod n, ascending."""
    _check_positive(n)
    return [a for a in range(n) if (a * a - a) % n == 0]


def enumerate_ring_homs(m: int, n: int) -> list[RingHomWitness]:
    _check_moduli(m, n)
    return [
        RingHomWitness(m, n, a)
        for a in range(n)
        if (a * a - a) % n == 0 and (m * a) % n == 0
    ]


def count_ring_homs_closed_form(m: int, n: int) -> int:
    """2**omega(n), valid only when n divides m.

    Raises PreconditionError otherwise; use ``enumerate_ring_homs`` for the
    general count.
    """
    _check_moduli(m, n)
    if m % n:
        raise PreconditionError(f"closed form needs n | m, got m={m}, n={n}")
    return 2 ** omega(n)
