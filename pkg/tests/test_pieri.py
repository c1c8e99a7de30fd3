import pytest
from hypothesis import given, settings, strategies as st

import oracles
from plethysm.errors import InvalidInputError
from plethysm.partitions import partitions_of
from plethysm.pieri import (
    SSYT, ConstraintSystem, PieriPoint, count_lattice_points, enumerate_ssyt, kostka_count,
    pieri_constraints, polytope_count, polytope_dimension_bound, ssyt_polytope_bijection,
    witness_ssyt,
)


def test_enumeration_is_sorted_by_reading_word():
    tabs = enumerate_ssyt((3, 2, 1), (2, 2, 2))
    assert [str(T) for T in tabs] == ["112/23/3", "113/22/3"]
    assert all(T.is_semistandard() for T in tabs)


def test_enumerate_general_content():
    assert len(enumerate_ssyt((2, 1), (1, 1, 1))) == 2
    assert len(enumerate_ssyt((3, 1), (2, 1, 1))) == 2
    with pytest.raises(InvalidInputError):
        enumerate_ssyt((2, 1), (1, 1))


@pytest.mark.parametrize("la,alpha", [((3, 2, 1), (2, 2, 2)), ((4, 2), (2, 2, 2)), ((3, 3), (2, 2, 2)),
                                      ((2, 2, 1, 1), (2, 2, 1, 1)), ((4, 2, 2), (2, 2, 2, 2))])
def test_brute_counts_match_schur_polynomial_coefficients(la, alpha):
    assert len(enumerate_ssyt(la, alpha)) == oracles.schur_monomial_coefficient(la, alpha)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_three_counts_agree(p, k, data):
    la = data.draw(st.sampled_from(partitions_of(p * k)))
    counts = {mode: kostka_count(la, p, k, mode) for mode in ("brute", "chain_dp", "polytope")}
    assert len(set(counts.values())) == 1, counts


def test_too_many_rows_count_zero():
    assert kostka_count((1, 1, 1, 1), 2, 2, "polytope") == 0
    assert kostka_count((1, 1, 1, 1), 2, 2, "chain_dp") == 0
    assert polytope_count((1, 1, 1, 1), 2, 2, 3) == 0


def test_polytope_dilation():
    assert polytope_count((2, 2), 4, 1, 0) == 1
    for d in range(1, 5):
        assert polytope_count((3, 2, 1), 3, 2, d) == kostka_count((3 * d, 2 * d, d), 3, 2 * d, "chain_dp")


def test_dimension_bound():
    assert polytope_dimension_bound((3, 2, 1), 3, 2) == 1
    assert polytope_dimension_bound((2, 1, 1), 4, 1) == 3


def test_bijection_examples():
    assert ssyt_polytope_bijection(SSYT.parse("11/22"), 2, 2) == PieriPoint(((0, 2),))
    assert ssyt_polytope_bijection(SSYT.parse("1122"), 2, 2) == PieriPoint(((2, 0),))
    assert ssyt_polytope_bijection(PieriPoint(((0, 2),)), 2, 2) == SSYT.parse("11/22")
    with pytest.raises(InvalidInputError):
        ssyt_polytope_bijection(SSYT.parse("112"), 2, 2)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (3, 3), (4, 2)])
def test_bijection_round_trip_and_membership(p, k):
    for la in partitions_of(p * k, p):
        system = pieri_constraints(la, p, k)
        points = set()
        for T in enumerate_ssyt(la, (k,) * p):
            x = ssyt_polytope_bijection(T, p, k)
            assert system.contains(x.flat())
            assert ssyt_polytope_bijection(x, p, k) == T
            points.add(x)
        assert len(points) == count_lattice_points(system)


def test_h_representation_round_trip():
    system = pieri_constraints((4, 3, 1), 4, 2)
    text = system.to_text()
    assert text.splitlines()[1].startswith("vars ")
    again = ConstraintSystem.from_text(text)
    assert again.ineq == system.ineq and again.eq == system.eq
    assert count_lattice_points(again) == kostka_count((4, 3, 1), 4, 2)


def test_witness_example():
    assert str(witness_ssyt((3, 2, 1), 3, 2)) == "112/23/3"


@pytest.mark.parametrize("p", range(1, 6))
@pytest.mark.parametrize("k", range(1, 4))
def test_witness_is_always_valid(p, k):
    for la in partitions_of(p * k, p):
        T = witness_ssyt(la, p, k)
        assert T.is_semistandard() and T.shape == la and T.content(p) == (k,) * p


def test_witness_rejects_long_shapes():
    with pytest.raises(InvalidInputError):
        witness_ssyt((1, 1, 1), 2, 1)
