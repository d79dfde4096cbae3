"""Finite direct products Z_{m_1} x ... x Z_{m_k}.

Counts come in pairs: a closed form (or the divisor-tuple sum) and a brute
force over the actual elements.  Brute-force paths respect a work budget and
raise ``BudgetExceeded`` instead of running unbounded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Iterator, Sequence

from .arith import _check_positive, divisors, lcm, lcm_many, omega, totient
from .cyclic import count_surjective_group_homs, element_order, enumerate_idempotents

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its work cap."""


@dataclass(frozen=True, order=True)
class ProductGroup:
    moduli: tuple[int, ...]

    def __init__(self, moduli: Sequence[int]) -> None:
        moduli = tuple(moduli)
        if not moduli:
            raise ValueError("a product group needs at least one factor")
        for m in moduli:
            _check_positive(m, "modulus")
        object.__setattr__(self, "moduli", moduli)

    @property
    def k(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All elements in lexicographic order."""
        return product(*(range(m) for m in self.moduli))

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def __str__(self) -> str:
        return " x ".join(f"Z_{m}" for m in self.moduli)


def _as_group(g) -> ProductGroup:
    return g if isinstance(g, ProductGroup) else ProductGroup(g)


@dataclass(frozen=True)
class DivisorTuple:
    entries: tuple[int, ...]
    lcm_value: int


def _check_budget(work: int, budget: int, what: str) -> None:
    if work > budget:
        raise BudgetExceeded(f"{what}: {work} work units exceeds budget {budget}")


def componentwise_obstruction(G, H) -> str | None:
    """Why no component-wise surjection G -> H exists, or None if one does."""
    G, H = _as_group(G), _as_group(H)
    if G.k != H.k:
        return f"length mismatch: {G.k} source factors vs {H.k} target factors"
    for i, (m, n) in enumerate(zip(G.moduli, H.moduli)):
        if m % n:
            return f"factor {i}: {n} does not divide {m}"
    return None


def count_componentwise_surjective_homs(G, H) -> int:
    """Number of tuples of surjections Z_{m_i} -> Z_{n_i}, i.e. prod phi(n_i).

    Only maps that send the i-th source factor into the i-th target factor
    are counted.  Returns 0 (and logs the reason) when some n_i does not
    divide m_i.  Mismatched lengths raise ValueError.
    """
    G, H = _as_group(G), _as_group(H)
    if G.k != H.k:
        raise ValueError(componentwise_obstruction(G, H))
    reason = componentwise_obstruction(G, H)
    if reason is not None:
        log.debug("no component-wise surjection %s -> %s: %s", G, H, reason)
        return 0
    return prod(totient(n) for n in H.moduli)


def componentwise_surjective_oracle(G, H) -> int:
    """Product of the per-factor cyclic counts."""
    G, H = _as_group(G), _as_group(H)
    if G.k != H.k:
        raise ValueError(componentwise_obstruction(G, H))
    return prod(count_surjective_group_homs(m, n) for m, n in zip(G.moduli, H.moduli))


def count_product_idempotents(R) -> int:
    """2 ** (sum of omega(m_i)); factors equal to 1 contribute nothing."""
    R = _as_group(R)
    return 2 ** sum(omega(m) for m in R.moduli)


def enumerate_product_idempotents(R, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Idempotent elements, lexicographic.  Each factor is scanned separately."""
    R = _as_group(R)
    _check_budget(R.order, budget, f"idempotents of {R}")
    per_factor = [enumerate_idempotents(m) for m in R.moduli]
    return list(product(*per_factor))


def idempotents_by_scan(R, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Idempotents found by testing x*x == x on every element of R."""
    R = _as_group(R)
    _check_budget(R.order, budget, f"idempotent scan of {R}")
    return [
        x for x in R.elements()
        if all((a * a - a) % m == 0 for a, m in zip(x, R.moduli))
    ]


def group_exponent(R) -> int:
    return lcm_many(_as_group(R).moduli)


def divisor_tuples(R, d: int) -> list[DivisorTuple]:
    """Tuples (d_1, ..., d_k) with d_i | m_i and lcm equal to d."""
    R = _as_group(R)
    _check_positive(d, "d")
    out = []
    for entries in product(*(divisors(m) for m in R.moduli)):
        value = lcm_many(entries)
        if value == d:
            out.append(DivisorTuple(tuple(entries), value))
    return out


def count_elements_of_order(R, d: int) -> int:
    """Sum of phi(d_1)...phi(d_k) over divisor tuples whose lcm is d."""
    R = _as_group(R)
    _check_positive(d, "d")
    if group_exponent(R) % d:
        return 0
    return sum(prod(totient(x) for x in t.entries) for t in divisor_tuples(R, d))


def product_element_order(x: Sequence[int], moduli: Sequence[int]) -> int:
    result = 1
    for a, m in zip(x, moduli):
        result = lcm(result, element_order(a, m))
    return result


def order_by_repeated_addition(R, x: Sequence[int]) -> int:
    """Smallest t >= 1 with t*x == 0, found by adding x to itself."""
    R = _as_group(R)
    zero = tuple(0 for _ in R.moduli)
    acc = tuple(x)
    t = 1
    while acc != zero:
        acc = R.add(acc, x)
        t += 1
    return t


def order_distribution_by_scan(R, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Map order -> number of elements, computed element by element."""
    R = _as_group(R)
    _check_budget(R.order, budget, f"order scan of {R}")
    counts: dict[int, int] = {}
    for x in R.elements():
        o = product_element_order(x, R.moduli)
        counts[o] = counts.get(o, 0) + 1
    return dict(sorted(counts.items()))


def count_maximal_order_elements(R) -> int:
    R = _as_group(R)
    return count_elements_of_order(R, group_exponent(R))


@dataclass(frozen=True)
class MatrixHomCount:
    """Homomorphism counts from residue-matrix enumeration.

    ``surjective`` is None when image testing would exceed the budget.
    """

    total: int
    surjective: int | None


def _column_choices(G: ProductGroup, H: ProductGroup) -> list[list[tuple[int, ...]]]:
    # images of the i-th source generator: vectors in H killed by m_i
    choices = []
    for m in G.moduli:
        per_target = [[a for a in range(n) if (m * a) % n == 0] for n in H.moduli]
        choices.append(list(product(*per_target)))
    return choices


def enumerate_all_group_homs_matrix(G, H, budget: int = DEFAULT_BUDGET) -> MatrixHomCount:
    """Count every homomorphism G -> H, not just component-wise ones.

    A homomorphism is a matrix (a_ji) with m_i * a_ji == 0 mod n_j.  The
    total must fit the budget; the surjective subcount additionally needs
    |G| * total within budget, since each map's image is built by brute force.
    """
    G, H = _as_group(G), _as_group(H)
    predicted = prod(gcd(m, n) for m in G.moduli for n in H.moduli)
    _check_budget(predicted, budget, f"hom matrices {G} -> {H}")
    test_images = G.order * predicted <= budget

    source = list(G.elements()) if test_images else []
    target_size = H.order
    total = surjective = 0
    for cols in product(*_column_choices(G, H)):
        total += 1
        if not test_images:
            continue
        image = set()
        for x in source:
            image.add(tuple(
                sum(x[i] * cols[i][j] for i in range(G.k)) % n
                for j, n in enumerate(H.moduli)
            ))
            if len(image) == target_size:
                surjective += 1
                break
    return MatrixHomCount(total, surjective if test_images else None)
