import pytest

from homcount.arith import is_prime, omega, totient
from homcount.cyclic import (
    CyclicHomWitness,
    PreconditionError,
    RingHomWitness,
    count_ring_homs_closed_form,
    count_surjective_group_homs,
    element_order,
    enumerate_group_homs,
    enumerate_idempotents,
    enumerate_ring_homs,
    image_is_everything,
    surjective_homs_oracle,
)


def images(witnesses):
    return [w.generator_image for w in witnesses]


@pytest.mark.parametrize("m, n, expected", [(4, 2, [0, 1]), (3, 1, [0]), (12, 4, [0, 1, 2, 3])])
def test_enumerate_group_homs_examples(m, n, expected):
    assert images(enumerate_group_homs(m, n)) == expected


@pytest.mark.parametrize("m, n, expected", [(8, 2, 1), (12, 5, 0), (12, 4, 2)])
def test_count_surjective_examples(m, n, expected):
    assert count_surjective_group_homs(m, n) == expected


def test_surjective_oracle_images():
    assert images(surjective_homs_oracle(12, 4)) == [1, 3]


@pytest.mark.parametrize("n, expected", [(7, [0, 1]), (6, [0, 1, 3, 4]), (1, [0])])
def test_enumerate_idempotents_examples(n, expected):
    assert enumerate_idempotents(n) == expected


@pytest.mark.parametrize("m, n, expected", [(6, 2, [0, 1]), (3, 1, [0]), (12, 6, [0, 1, 3, 4])])
def test_enumerate_ring_homs_examples(m, n, expected):
    assert images(enumerate_ring_homs(m, n)) == expected


@pytest.mark.parametrize("m, n, expected", [(12, 6, 4), (5, 1, 1), (100, 10, 4)])
def test_ring_closed_form_examples(m, n, expected):
    assert count_ring_homs_closed_form(m, n) == expected
    assert len(enumerate_ring_homs(m, n)) == expected


def test_ring_closed_form_refuses_outside_domain():
    with pytest.raises(PreconditionError):
        count_ring_homs_closed_form(10, 4)
    # the general count is still available by enumeration
    assert len(enumerate_ring_homs(10, 4)) == 1


@pytest.mark.parametrize("a, n, expected", [(0, 5, 1), (3, 12, 4), (1, 9, 9)])
def test_element_order_examples(a, n, expected):
    assert element_order(a, n) == expected


def test_element_order_rejects_unreduced():
    with pytest.raises(ValueError):
        element_order(5, 5)


@pytest.mark.parametrize("fn", [enumerate_group_homs, count_surjective_group_homs, enumerate_ring_homs])
def test_zero_moduli_rejected(fn):
    with pytest.raises(ValueError):
        fn(0, 3)
    with pytest.raises(ValueError):
        fn(3, 0)


def test_witness_validation():
    with pytest.raises(ValueError):
        CyclicHomWitness(3, 2, 1)  # 3*1 not 0 mod 2
    with pytest.raises(ValueError):
        RingHomWitness(6, 6, 2)  # 2 not idempotent mod 6
    w = CyclicHomWitness(12, 4, 3)
    assert [w(x) for x in range(5)] == [0, 3, 2, 1, 0]


def test_enumeration_matches_functional_oracle(oracles):
    for m in range(1, 31):
        for n in range(1, 31):
            assert images(enumerate_group_homs(m, n)) == oracles.homs(m, n)
            assert images(enumerate_ring_homs(m, n)) == oracles.ring_homs(m, n)


def test_hom_count_is_gcd():
    from math import gcd

    for m in range(1, 80):
        for n in range(1, 80):
            assert len(enumerate_group_homs(m, n)) == gcd(m, n)


def test_surjective_oracle_agreement():
    for m in range(1, 121):
        for n in range(1, 121):
            expected = totient(n) if m % n == 0 else 0
            assert count_surjective_group_homs(m, n) == expected
            assert len(surjective_homs_oracle(m, n)) == expected


def test_generator_criterion_matches_image_test():
    for m in range(1, 51):
        for n in range(1, 51):
            for w in enumerate_group_homs(m, n):
                assert (element_order(w.generator_image, n) == n) == image_is_everything(w)


def test_idempotent_count_small():
    for n in range(2, 3000):
        assert len(enumerate_idempotents(n)) == 2 ** omega(n)


def test_prime_targets_have_two_idempotents():
    for p in range(2, 3000):
        if is_prime(p):
            assert enumerate_idempotents(p) == [0, 1]


@pytest.mark.parametrize("m", range(2, 201, 2))
def test_even_source_into_z2(m):
    assert count_surjective_group_homs(m, 2) == 1
    assert len(enumerate_ring_homs(m, 2)) == 2
