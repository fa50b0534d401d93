from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtinv.errors import BadPunctualSeries, DimensionTooSmall
from dtinv.partitions import NDPartition, count_partitions, enumerate_ndpartitions, partition_series
from dtinv.series import Series, coefficient, int_pow
from dtinv.torus import (
    MonomialIdeal,
    QuotFixedPoint,
    chi_punctual_quot,
    chi_quot_series,
    config_space_chi,
    enumerate_monomial_ideals,
    enumerate_quot_fixed_points,
    ideal_to_partition,
    partition_to_ideal,
    stratified_chi_quot,
    stratified_series,
)

from oracles import minimal_generators, order_ideals_bruteforce


def test_empty_partition_is_unit_ideal():
    I = partition_to_ideal(NDPartition(3, ()))
    assert I == MonomialIdeal.unit(3)
    assert I.colength == 0
    assert ideal_to_partition(I).weight == 0


def test_hook_partition_staircase():
    p = NDPartition.from_dict(2, {(0,): 2, (1,): 1})
    I = partition_to_ideal(p)
    assert I.staircase == {(0, 0), (1, 0), (0, 1)}
    assert I.colength == 3


def test_bijection_round_trip():
    for m in range(6):
        for p in enumerate_ndpartitions(3, m):
            I = partition_to_ideal(p)
            assert I.colength == m
            assert ideal_to_partition(I) == p


def test_ideal_to_partition_needs_two_vars():
    with pytest.raises(DimensionTooSmall):
        ideal_to_partition(MonomialIdeal(1, frozenset({(0,)})))


def test_staircase_must_be_downward_closed():
    with pytest.raises(ValueError):
        MonomialIdeal(2, frozenset({(1, 0)}))


def test_monomial_ideal_counts():
    assert len(enumerate_monomial_ideals(3, 1)) == 1
    assert enumerate_monomial_ideals(3, 1)[0].minimal_generators() == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert len(enumerate_monomial_ideals(3, 2)) == 3
    assert len(enumerate_monomial_ideals(3, 4)) == 13


def test_monomial_ideals_match_subset_bruteforce():
    for m in range(6):
        ours = {I.staircase for I in enumerate_monomial_ideals(3, m)}
        assert ours == order_ideals_bruteforce(3, m)


def test_ideals_agree_with_partition_enumeration():
    for n in (2, 3, 4):
        for m in range(6):
            a = {I.staircase for I in enumerate_monomial_ideals(n, m)}
            b = {p.boxes() for p in enumerate_ndpartitions(n, m)}
            assert a == b


def test_minimal_generators_match_oracle():
    for m in range(5):
        for I in enumerate_monomial_ideals(3, m):
            assert sorted(I.minimal_generators()) == sorted(minimal_generators(I.staircase, 3))


def test_from_generators():
    I = MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)])
    assert I.colength == 4
    assert I.contains((1, 1, 0)) and not I.contains((1, 0, 0))
    with pytest.raises(ValueError):
        MonomialIdeal.from_generators(2, [(1, 1)])


def test_enumeration_rejects_small_dim():
    with pytest.raises(DimensionTooSmall):
        enumerate_monomial_ideals(1, 2)
    with pytest.raises(DimensionTooSmall):
        enumerate_quot_fixed_points(1, 2, 2)


def test_quot_fixed_point_counts():
    assert len(enumerate_quot_fixed_points(3, 2, 1)) == 2
    assert len(enumerate_quot_fixed_points(3, 2, 2)) == 7
    for m in range(5):
        assert len(enumerate_quot_fixed_points(3, 1, m)) == len(enumerate_monomial_ideals(3, m))


def test_quot_fixed_point_totals():
    for E in enumerate_quot_fixed_points(3, 3, 3):
        assert E.total == sum(I.colength for I in E.ideals) == 3
        assert E.rank == 3 and E.nvars == 3


def test_quot_fixed_points_symmetric_under_swap():
    pts = {E.ideals for E in enumerate_quot_fixed_points(3, 2, 4)}
    assert {(b, a) for a, b in pts} == pts


def test_chi_punctual_quot_examples():
    assert chi_punctual_quot(3, 2, 3) == 18
    for n in (2, 3):
        assert chi_punctual_quot(n, 2, 0) == 1
    for m in range(6):
        assert chi_punctual_quot(3, 1, m) == count_partitions(3, m)


def test_fixed_point_factorization():
    for r in (1, 2):
        P = int_pow(partition_series(3, 6), r)
        for m in range(7):
            assert chi_punctual_quot(3, r, m) == P[m]


def test_chi_quot_series_examples():
    from dtinv.partitions import macmahon

    for r in (1, 2):
        assert chi_quot_series(3, r, 1, 6) == int_pow(macmahon(6), r)
    assert chi_quot_series(3, 2, -176, 4)[1] == -352
    assert chi_quot_series(3, 1, 0, 5) == Series.one(5)
    assert chi_quot_series(3, 2, -144, 8) == int_pow(macmahon(8), -288)
    with pytest.raises(DimensionTooSmall):
        chi_quot_series(1, 1, 1, 3)


def test_config_space_chi():
    assert config_space_chi(-176, 0) == 1
    assert config_space_chi(-176, 1) == -176
    assert config_space_chi(-176, 2) == 31152
    assert config_space_chi(3, 4) == 0


def test_stratified_examples():
    P = partition_series(3, 6)
    assert stratified_chi_quot(P, -176, 0) == 1
    assert stratified_chi_quot(P, -176, 1) == -176 * P[1]
    direct = int_pow(P, -176)
    for m in range(7):
        assert stratified_chi_quot(P, -176, m) == direct[m]


def test_stratified_rejects_bad_punctual():
    with pytest.raises(BadPunctualSeries):
        stratified_chi_quot(Series.from_coeffs([2, 1, 1]), 5, 2)


def test_stratified_series_rank_two():
    P2 = int_pow(partition_series(3, 5), 2)
    assert stratified_series(P2, -144) == int_pow(P2, -144)


@given(
    st.lists(st.integers(-4, 4), min_size=6, max_size=6),
    st.integers(-200, 200),
)
@settings(max_examples=40, deadline=None)
def test_prop_stratification_is_power(tail, chi):
    punctual = Series.from_coeffs([1] + tail)
    assert stratified_series(punctual, chi) == int_pow(punctual, chi)
