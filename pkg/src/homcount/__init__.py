"""Exact counts of homomorphisms between finite cyclic groups, rings, and their products."""

from .arith import Factorization, divisors, factorize, lcm_many, omega, totient, two_adic_valuation
from .cyclic import (
    CyclicHomWitness,
    PreconditionError,
    RingHomWitness,
    count_ring_homs_closed_form,
    count_surjective_group_homs,
    element_order,
    enumerate_group_homs,
    enumerate_idempotents,
    enumerate_ring_homs,
)
from .divisibility import (
    ClassificationRecord,
    ProductDivisibilityRecord,
    SweepReport,
    VerificationError,
    check_main_theorem,
    check_product_theorem,
    is_exceptional,
    sweep_cyclic,
    sweep_products,
)
from .products import (
    BudgetExceeded,
    DivisorTuple,
    MatrixHomCount,
    ProductGroup,
    count_componentwise_surjective_homs,
    count_elements_of_order,
    count_maximal_order_elements,
    count_product_idempotents,
    enumerate_all_group_homs_matrix,
    enumerate_product_idempotents,
    group_exponent,
)

__version__ = "0.1.0"
