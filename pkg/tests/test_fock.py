import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdchain import build_layer


def brute_force_states(sites, layer, cap):
    """Enumeration oracle: filter the full product lattice."""
    top = layer if cap is None else min(layer, cap)
    return {
        v
        for v in itertools.product(range(top + 1), repeat=sites)
        if sum(v) == layer and (cap is None or max(v) <= cap)
    }


def test_two_site_layer_two():
    basis = build_layer(2, 2)
    assert basis.states == ((2, 0), (1, 1), (0, 2))


def test_ten_site_layer_two_count():
    # stars and bars: C(11, 2) = 55
    basis = build_layer(10, 2)
    assert len(basis) == comb(11, 2) == 55


def test_cap_filters_states():
    basis = build_layer(2, 4, cap=2)
    assert basis.states == ((2, 2),)
    assert set(basis.states) == brute_force_states(2, 4, 2)


def test_empty_basis_is_valid_output():
    assert len(build_layer(2, 5, cap=2)) == 0


def test_index_of():
    basis = build_layer(2, 2)
    assert basis.index_of((1, 1)) == 1
    assert basis.index_of((3, 0)) is None  # wrong total
    with pytest.raises(ValueError):
        basis.index_of((1, 1, 0))


def test_round_trip_exhaustive():
    basis = build_layer(10, 2)
    for i, v in enumerate(basis.states):
        assert basis.index_of(v) == i


def test_preconditions():
    with pytest.raises(ValueError):
        build_layer(1, 2)
    with pytest.raises(ValueError):
        build_layer(3, -1)
    with pytest.raises(ValueError):
        build_layer(3, 2, cap=0)


sites_st = st.integers(min_value=2, max_value=6)
layer_st = st.integers(min_value=0, max_value=7)
cap_st = st.one_of(st.none(), st.integers(min_value=1, max_value=5))


@given(sites_st, layer_st, cap_st)
def test_matches_bruteforce_enumeration(sites, layer, cap):
    basis = build_layer(sites, layer, cap)
    assert set(basis.states) == brute_force_states(sites, layer, cap)
    assert len(set(basis.states)) == len(basis.states)


@given(sites_st, layer_st, cap_st)
def test_canonical_order_is_decreasing_lex(sites, layer, cap):
    basis = build_layer(sites, layer, cap)
    assert list(basis.states) == sorted(basis.states, reverse=True)


@given(sites_st, layer_st, cap_st)
def test_index_round_trip(sites, layer, cap):
    basis = build_layer(sites, layer, cap)
    for i, v in enumerate(basis.states):
        assert basis.index_of(v) == i


@given(sites_st, layer_st)
def test_uncapped_count_is_stars_and_bars(sites, layer):
    assert len(build_layer(sites, layer)) == comb(layer + sites - 1, layer)


@given(sites_st, layer_st)
def test_huge_cap_equals_no_cap(sites, layer):
    assert build_layer(sites, layer, cap=10**9).states == build_layer(sites, layer).states
    if layer >= 1:
        assert build_layer(sites, layer, cap=layer).states == build_layer(sites, layer).states


@given(sites_st, cap_st)
def test_layers_partition_the_truncated_space(sites, cap):
    top_layer = 6
    all_states = [build_layer(sites, m, cap).states for m in range(top_layer + 1)]
    union = set().union(*[set(s) for s in all_states])
    assert len(union) == sum(len(s) for s in all_states)


@given(sites_st, st.integers(min_value=0, max_value=5))
def test_sender_and_receiver_sit_at_the_corners(sites, layer):
    basis = build_layer(sites, layer)
    assert basis.states[0] == (layer,) + (0,) * (sites - 1)
    assert basis.states[-1] == (0,) * (sites - 1) + (layer,)
