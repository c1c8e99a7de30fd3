import pytest
from hypothesis import given, strategies as st
from sympy.functions.combinatorial.numbers import partition as partition_count

import oracles
from plethysm.errors import InvalidInputError
from plethysm.partitions import (
    ExceptionalTag, as_partition, centralizer_order, classify_exceptional, conjugate,
    cycle_type_sign, dominates, format_partition, hook_dimension, parse_partition,
    partitions_of, scale,
)

partition_st = st.lists(st.integers(1, 7), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_as_partition_strips_trailing_zeros():
    assert as_partition([3, 1, 0, 0]) == (3, 1)
    assert as_partition([]) == ()


@pytest.mark.parametrize("bad", [[1, 2], [2, -1], [0, 1]])
def test_as_partition_rejects(bad):
    with pytest.raises(InvalidInputError):
        as_partition(bad)


def test_parse_and_format_round_trip():
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("") == ()
    assert format_partition((4, 4, 1)) == "4,4,1"
    with pytest.raises(InvalidInputError):
        parse_partition("3,x")


def test_reverse_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(5, 2) == ((5,), (4, 1), (3, 2))
    assert partitions_of(0) == ((),)


@pytest.mark.parametrize("n", range(0, 16))
def test_partition_counts_match_sympy(n):
    assert len(partitions_of(n)) == partition_count(n)


@given(partition_st)
def test_conjugate_is_an_involution(la):
    assert conjugate(conjugate(la)) == la
    assert sum(conjugate(la)) == sum(la)


@given(partition_st)
def test_hook_dimension_counts_standard_tableaux(la):
    assert hook_dimension(la) == oracles.syt_count(la)


def test_hook_dimension_examples():
    assert hook_dimension(()) == 1
    assert [hook_dimension(mu) for mu in partitions_of(4)] == [1, 3, 2, 3, 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_centralizer_orders_by_brute_force(n):
    for rho in partitions_of(n):
        assert centralizer_order(rho) == oracles.brute_centralizer(rho)


def test_cycle_type_sign():
    assert cycle_type_sign((2, 1)) == -1
    assert cycle_type_sign((3,)) == 1
    assert cycle_type_sign((2, 2)) == 1


def test_dominance_and_scale():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert scale((2, 1), 3) == (6, 3)
    assert scale((2, 1), 0) == ()


@pytest.mark.parametrize("la,p,k,tag,params", [
    ((6,), 3, 2, ExceptionalTag.FULL_ROW, ()),
    ((2, 2, 2), 3, 2, ExceptionalTag.RECTANGLE, ()),
    ((3, 3), 3, 2, ExceptionalTag.NEAR_RECTANGLE_EQUAL, (3,)),
    ((4, 1, 1), 3, 2, ExceptionalTag.ROW_OVER_RECTANGLE, (4, 1)),
    ((4, 4, 1), 3, 3, ExceptionalTag.RECTANGLE_OVER_ROW, (4, 1)),
    ((3, 3, 1, 1), 4, 2, ExceptionalTag.NON_EXCEPTIONAL, ()),
    ((2, 2, 1), 5, 1, ExceptionalTag.NON_EXCEPTIONAL, ()),
])
def test_classify_examples(la, p, k, tag, params):
    result = classify_exceptional(la, p, k)
    assert result.tag is tag and result.params == params
    assert result.exceptional == (tag is not ExceptionalTag.NON_EXCEPTIONAL)


def test_full_row_takes_priority_for_p_one():
    assert classify_exceptional((3,), 1, 3).tag is ExceptionalTag.FULL_ROW


def test_classify_rejects_wrong_size():
    with pytest.raises(InvalidInputError):
        classify_exceptional((3, 2), 3, 2)
    with pytest.raises(InvalidInputError):
        classify_exceptional((1, 1, 1, 1), 2, 2)
