"""Truncated integer series, series reversion, and the counting tables."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubedecomp.series import (
    TruncatedSeries,
    _revert_by_extraction,
    auxiliary_counts,
    decomposition_counts,
    decomposition_series,
    mobius_series,
    refined_counts,
    series_from_list,
)

# Hand-checked reference rows (also used by the CLI self-check suite).
S_ROWS = {
    1: [1, 1, 3, 10, 39, 160, 691, 3081, 14095, 65757],
    2: [1, 2, 10, 59, 394, 2810, 20998, 162216, 1285185, 10384986],
    3: [1, 3, 21, 177, 1677, 17001, 180525, 1981909, 22314339, 256245783],
}
A_ROWS = {
    1: [1, 1, 2, 3, 6, 9, 17, 28, 50, 83, 147],
    2: [1, 2, 6, 15, 42, 108, 291, 766, 2041, 5395, 14328],
    3: [1, 3, 12, 42, 156, 558, 2028, 7318, 26490, 95730, 346218],
}

short_series = st.builds(
    series_from_list,
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=25),
)


@given(short_series, short_series)
def test_ring_ops_are_componentwise_consistent(a, b):
    assert (a + b) - b == a.truncate(min(a.order, b.order))
    assert a * b == b * a


@given(short_series, short_series, short_series)
def test_multiplication_distributes(a, b, c):
    n = min(a.order, b.order, c.order)
    lhs = (a * (b + c)).truncate(n)
    rhs = (a * b).truncate(n) + (a * c).truncate(n)
    assert lhs == rhs


def test_coefficient_bounds_checked():
    s = series_from_list([1, 2, 3])
    assert s.coefficient(2) == 3
    with pytest.raises(IndexError):
        s.coefficient(3)
    with pytest.raises(ValueError):
        s.truncate(5)


def test_power_matches_repeated_multiplication():
    s = series_from_list([0, 1, 1, 0, 2])
    assert s.power(3) == s * s * s
    assert s.power(0) == series_from_list([1, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        s.power(-1)


def test_compose_identity_and_valuation_guard():
    x = series_from_list([0, 1, 0, 0, 0, 0])
    s = series_from_list([3, -1, 4, 1, -5, 9])
    assert s.compose(x) == s
    with pytest.raises(ValueError):
        s.compose(series_from_list([1, 1]))


@given(short_series, short_series)
def test_compose_is_multiplicative(a, b):
    # (a*b) o inner == (a o inner) * (b o inner)
    inner = series_from_list([0, 1, -1, 2])
    n = min(a.order, b.order, inner.order)
    lhs = (a * b).compose(inner.truncate(n))
    rhs = a.truncate(n).compose(inner.truncate(n)) * b.truncate(n).compose(inner.truncate(n))
    assert lhs == rhs


def test_mobius_series_leading_terms():
    m = mobius_series(2, 8)
    assert m.coeffs == (0, 1, -2, -2, 1, -2, 4, -2, 0)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_decomposition_count_tables(d):
    assert decomposition_counts(d, 10)[1:] == S_ROWS[d]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_auxiliary_count_tables(d):
    assert auxiliary_counts(d, 10) == A_ROWS[d]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_reversion_round_trip(d):
    order = 40
    composed = mobius_series(d, order).compose(decomposition_series(d, order))
    assert composed.coeffs == (0, 1) + (0,) * (order - 1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_reversion_against_extraction_route(d):
    assert _revert_by_extraction(d, 25) == decomposition_counts(d, 25)


def test_auxiliary_counts_are_positive_and_nondecreasing():
    for d in (1, 2, 3, 4):
        a = auxiliary_counts(d, 60)
        assert all(v > 0 for v in a)
        assert all(a[n + 1] >= a[n] for n in range(60))


def test_counts_grow_with_dimension():
    for n in range(2, 30):
        s1, s2, s3 = (decomposition_counts(d, 30)[n] for d in (1, 2, 3))
        assert s1 < s2 < s3


def test_refined_counts_low_dimensional_cases():
    # d = 1, n = 3: three decompositions, one with gcd 3, two with gcd 2
    row2 = refined_counts(1, (2,), 6)
    row3 = refined_counts(1, (3,), 6)
    assert row2[2] == 1 and row2[3] == 2
    assert row3[3] == 1
    # exact-gcd classes partition the n-region decompositions
    s = decomposition_counts(1, 6)
    for n in range(1, 7):
        total = sum(refined_counts(1, (r,), 6)[n] for r in range(1, n + 1))
        assert total == s[n]


def test_refined_counts_partition_in_dimension_two():
    s = decomposition_counts(2, 4)
    for n in range(1, 5):
        total = sum(
            refined_counts(2, (r1, r2), 4)[n]
            for r1 in range(1, n + 1)
            for r2 in range(1, n + 1)
        )
        assert total == s[n]


def test_refined_counts_validation():
    with pytest.raises(ValueError):
        refined_counts(2, (2,), 5)
    with pytest.raises(ValueError):
        refined_counts(1, (0,), 5)


def test_decimal_strings_round_trip():
    s = decomposition_series(2, 12)
    assert series_from_list([int(v) for v in s.to_decimal_strings()]) == s
