from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from plethysm.errors import InvalidInputError
from plethysm.partitions import conjugate, partitions_of
from plethysm.pieri import kostka_count
from plethysm.symfunc import (
    PowerSum, base_to_power, omega, plethysm_coefficient, plethysm_coefficient_fast,
    plethysm_compose, power_pairing, reduce_by_strip, schur_expand, tensor_multiplicity,
)

# s_mu[h_k] restricted to partitions with at most n parts, computed by
# substituting the degree-k monomials of n variables into s_mu and reading
# off alternant coefficients (tests/oracles.py). Keys: (mu, k, n).
FROZEN_PLETHYSMS = {
    ((1, 1), 3, 2): {(3, 3): 1, (5, 1): 1},
    ((1, 1), 4, 2): {(5, 3): 1, (7, 1): 1},
    ((1, 1, 1), 2, 6): {(3, 3): 1, (4, 1, 1): 1},
    ((1, 1, 1), 3, 3): {(3, 3, 3): 1, (5, 3, 1): 1, (6, 3): 1, (7, 1, 1): 1},
    ((1, 1, 1, 1), 2, 4): {(4, 3, 1): 1, (5, 1, 1, 1): 1},
    ((2,), 3, 2): {(4, 2): 1, (6,): 1},
    ((2,), 4, 2): {(4, 4): 1, (6, 2): 1, (8,): 1},
    ((2, 1), 2, 6): {(3, 2, 1): 1, (4, 2): 1, (5, 1): 1},
    ((2, 1), 3, 3): {(4, 3, 2): 1, (5, 3, 1): 1, (5, 4): 1, (6, 2, 1): 1, (6, 3): 1, (7, 2): 1, (8, 1): 1},
    ((2, 1, 1), 2, 4): {(3, 3, 2): 1, (4, 2, 1, 1): 1, (4, 3, 1): 1, (5, 2, 1): 1, (5, 3): 1, (6, 1, 1): 1},
    ((2, 2), 2, 4): {(3, 3, 1, 1): 1, (4, 2, 2): 1, (4, 4): 1, (5, 2, 1): 1, (6, 2): 1},
    ((3,), 2, 6): {(2, 2, 2): 1, (4, 2): 1, (6,): 1},
    ((3,), 3, 3): {(4, 4, 1): 1, (5, 2, 2): 1, (6, 3): 1, (7, 2): 1, (9,): 1},
    ((3, 1), 2, 4): {(3, 2, 2, 1): 1, (4, 2, 2): 1, (4, 3, 1): 1, (5, 2, 1): 1, (5, 3): 1, (6, 2): 1, (7, 1): 1},
    ((4,), 2, 4): {(2, 2, 2, 2): 1, (4, 2, 2): 1, (4, 4): 1, (6, 2): 1, (8,): 1},
}


def test_basic_expansions():
    assert base_to_power("h", 2) == PowerSum({(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)})
    assert base_to_power("e", 2) == PowerSum({(2,): Fraction(-1, 2), (1, 1): Fraction(1, 2)})
    assert omega(base_to_power("h", 4)) == base_to_power("e", 4)
    assert schur_expand(base_to_power("s", (3, 1))) == {(3, 1): 1}


def test_h_product_is_kostka_row():
    expansion = schur_expand(base_to_power("h", (2, 2, 2)))
    for la in partitions_of(6, 3):
        assert expansion.get(la, 0) == oracles.schur_monomial_coefficient(la, (2, 2, 2))
    assert all(len(la) <= 3 for la in expansion)


@pytest.mark.parametrize("key", sorted(FROZEN_PLETHYSMS))
def test_frozen_plethysm_tables(key):
    mu, k, n = key
    full = schur_expand(plethysm_compose(base_to_power("s", mu), base_to_power("h", k)), max_length=n)
    assert full == FROZEN_PLETHYSMS[key]


@pytest.mark.parametrize("key", sorted(FROZEN_PLETHYSMS))
def test_fast_path_on_frozen_tables(key):
    mu, k, n = key
    for pi in partitions_of(sum(mu) * k, n):
        assert plethysm_coefficient_fast(mu, k, pi) == FROZEN_PLETHYSMS[key].get(pi, 0)


def test_live_oracle_small():
    assert schur_expand(plethysm_compose(base_to_power("h", 2), base_to_power("h", 2))) == \
        oracles.plethysm_schur("h", 2, 2, 4)
    assert schur_expand(plethysm_compose(base_to_power("e", 2), base_to_power("h", 3)), max_length=2) == \
        oracles.plethysm_schur("e", 2, 3, 2)


def test_schur_inner_examples():
    assert plethysm_coefficient((2,), (1, 1), (2, 2)) == 1
    assert plethysm_coefficient((2,), (1, 1), (1, 1, 1, 1)) == 1
    assert plethysm_coefficient((2,), (2,), (3, 1)) == 0
    assert plethysm_coefficient((2,), (), ()) == 1
    with pytest.raises(InvalidInputError):
        plethysm_coefficient((2,), (2,), (3,))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_fast_equals_full_expansion(p, k):
    for mu in partitions_of(p):
        full = schur_expand(plethysm_compose(base_to_power("s", mu), base_to_power("h", k)))
        for pi in partitions_of(p * k):
            assert plethysm_coefficient_fast(mu, k, pi) == full.get(pi, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fast_e_path_equals_full_expansion(k):
    for mu in partitions_of(3):
        full = schur_expand(plethysm_compose(base_to_power("s", mu), base_to_power("e", k)))
        for pi in partitions_of(3 * k):
            assert plethysm_coefficient_fast(mu, k, pi, inner="e") == full.get(pi, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_tensor_multiplicity_is_kostka(p, k, data):
    la = data.draw(st.sampled_from(partitions_of(p * k)))
    assert tensor_multiplicity(la, p, k) == kostka_count(la, p, k, "chain_dp")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_schur_weyl_sum(p, k, data):
    from plethysm.partitions import hook_dimension

    la = data.draw(st.sampled_from(partitions_of(p * k)))
    total = sum(hook_dimension(mu) * plethysm_coefficient_fast(mu, k, la) for mu in partitions_of(p))
    assert total == tensor_multiplicity(la, p, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3), st.integers(1, 3), st.data())
def test_strip_reduction_preserves_coefficients(p, k, strip, data):
    base = data.draw(st.sampled_from(partitions_of(p * k, p - 1)))
    la = tuple(x + strip for x in base) + (strip,) * (p - len(base))
    mu = data.draw(st.sampled_from(partitions_of(p)))
    reduced, k2, mu2 = reduce_by_strip(la, mu, k + strip)
    assert reduced == base and k2 == k
    assert mu2 == (conjugate(mu) if strip % 2 else mu)
    assert plethysm_coefficient_fast(mu, k + strip, la) == plethysm_coefficient_fast(mu2, k2, reduced)


def test_reduce_leaves_short_shapes_alone():
    assert reduce_by_strip((4, 2), (2, 1), 2) == ((4, 2), 2, (2, 1))


def test_power_pairing_identity_class_counts_tableaux():
    assert power_pairing((1, 1, 1), 2, (3, 2, 1)) == 2
    assert power_pairing((1, 1), 3, (4, 1, 1)) == 0


def test_size_mismatch_raises():
    with pytest.raises(InvalidInputError):
        plethysm_coefficient_fast((2,), 2, (3,))
