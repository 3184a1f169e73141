import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from descentkit.combinat import (
    CHAR_ZERO,
    compositions,
    concat_sharp,
    is_p_regular,
    lambda_of,
    p_equivalent,
    p_prime_type,
    p_regular_partitions,
    p_regularize,
    partitions,
    refines,
    weakly_refines,
)


def test_composition_counts_and_order():
    for n in range(1, 11):
        comps = compositions(n)
        assert len(comps) == 2 ** (n - 1)
        assert all(sum(q) == n and all(p >= 1 for p in q) for q in comps)
        assert list(comps) == sorted(comps)
    assert compositions(0) == ((),)


def test_partition_order_matches_reference():
    # ascending lexicographic on weakly decreasing tuples
    expected = [
        (1, 1, 1, 1, 1, 1),
        (2, 1, 1, 1, 1),
        (2, 2, 1, 1),
        (2, 2, 2),
        (3, 1, 1, 1),
        (3, 2, 1),
        (3, 3),
        (4, 1, 1),
        (4, 2),
        (5, 1),
        (6,),
    ]
    assert sorted(partitions(6)) == expected


def test_partitions_are_compositions_subset():
    for n in range(8):
        ps = set(partitions(n))
        assert ps <= set(compositions(n))
        assert all(tuple(sorted(p, reverse=True)) == p for p in ps)


def test_p_regular():
    assert is_p_regular((2, 1, 1), 3)
    assert not is_p_regular((2, 1, 1), 2)
    assert is_p_regular((5, 1), CHAR_ZERO)
    assert p_regular_partitions(4, 2) == ((3, 1), (4,))
    # p > n: everything is regular
    assert set(p_regular_partitions(5, 7)) == set(partitions(5))


def test_refinement():
    assert refines((1, 2, 1, 1), (3, 2))
    assert not refines((1, 1, 2, 1), (3, 2))
    assert weakly_refines((1, 1, 2, 1), (3, 2))
    assert not weakly_refines((4, 1), (3, 2))


@given(st.integers(1, 7), st.data())
@settings(max_examples=60, deadline=None)
def test_refines_implies_weakly_refines(n, data):
    comps = compositions(n)
    r = data.draw(st.sampled_from(comps))
    q = data.draw(st.sampled_from(comps))
    if refines(r, q):
        assert weakly_refines(r, q)
    # reflexivity of both
    assert refines(r, r) and weakly_refines(r, r)


def test_p_prime_type_and_equivalence():
    # part p^a * m' contributes p^a copies of m'
    assert p_prime_type((4,), 2) == (1, 1, 1, 1)
    assert p_prime_type((6,), 2) == (3, 3)
    assert p_equivalent((1, 1, 1, 1), (4,), 2)
    assert p_equivalent((1, 1, 1, 1), (3, 1), 3)
    assert not p_equivalent((3, 1), (4,), 2)
    assert p_equivalent((2, 2), (2, 2), CHAR_ZERO)
    assert not p_equivalent((2, 2), (4,), CHAR_ZERO)


def test_p_regularize():
    assert p_regularize((1, 1, 1, 1), 2) == (4,)
    assert p_regularize((2, 2, 2), 3) == (6,)
    assert p_regularize((3, 1), 2) == (3, 1)
    assert p_regularize((2, 1, 1), CHAR_ZERO) == (2, 1, 1)


@given(st.integers(1, 8), st.sampled_from([2, 3, 5]), st.data())
@settings(max_examples=60, deadline=None)
def test_p_regularize_is_canonical_class_representative(n, p, data):
    lam = data.draw(st.sampled_from(partitions(n)))
    reg = p_regularize(lam, p)
    assert is_p_regular(reg, p)
    assert p_equivalent(lam, reg, p)


def test_concat_sharp_examples():
    assert concat_sharp((3, 2, 1), 1, 2) == (4, 3)
    assert concat_sharp((3, 3, 1, 1), 1, 3) == (9,)
    assert concat_sharp((2, 1), 2, CHAR_ZERO) == (2, 2, 1)


def test_lambda_of():
    assert lambda_of((1, 3, 2)) == (3, 2, 1)
    assert lambda_of(()) == ()
