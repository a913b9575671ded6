"""Exact region geometry, split generation, grid gcd/lcm, and enumeration."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubedecomp.geometry import (
    Decomposition,
    decomposition_from_json_dict,
    decomposition_to_json_dict,
    enumerate_decompositions,
    enumerate_decompositions_up_to,
    gcd_of,
    grid_decomposition,
    is_split_generated,
    lcm_of,
    refines_grid,
    region_contains,
    regions_overlap,
    restrict_rescale,
    scale_map,
    split,
    split_decomposition,
    trivial_decomposition,
    unit_region,
    volume,
)
from cubedecomp.series import decomposition_counts


def box(*ivs):
    return tuple((F(a, b), F(c, d)) for a, b, c, d in ivs)


def interval_dec(*breaks):
    """1-d decomposition from interior breakpoints given as Fractions."""
    pts = [F(0)] + sorted(breaks) + [F(1)]
    return Decomposition(1, tuple(((lo, hi),) for lo, hi in zip(pts, pts[1:])))


# Two hand-drawn 2-d decompositions reused across tests: EIGHT has a whole
# left column, a middle column in quarters, and a right column whose lower
# half is split in two; ELEVEN additionally halves the left column and cuts
# the upper-right cell into three rows.
EIGHT = Decomposition(2, (
    box((0, 1, 1, 3), (0, 1, 1, 1)),
    box((1, 3, 2, 3), (0, 1, 1, 4)),
    box((1, 3, 2, 3), (1, 4, 1, 2)),
    box((1, 3, 2, 3), (1, 2, 3, 4)),
    box((1, 3, 2, 3), (3, 4, 1, 1)),
    box((2, 3, 1, 1), (1, 2, 1, 1)),
    box((2, 3, 5, 6), (0, 1, 1, 2)),
    box((5, 6, 1, 1), (0, 1, 1, 2)),
))
ELEVEN = Decomposition(2, (
    box((0, 1, 1, 3), (0, 1, 1, 2)),
    box((0, 1, 1, 3), (1, 2, 1, 1)),
    box((1, 3, 2, 3), (0, 1, 1, 4)),
    box((1, 3, 2, 3), (1, 4, 1, 2)),
    box((1, 3, 2, 3), (1, 2, 3, 4)),
    box((1, 3, 2, 3), (3, 4, 1, 1)),
    box((2, 3, 5, 6), (0, 1, 1, 2)),
    box((5, 6, 1, 1), (0, 1, 1, 2)),
    box((2, 3, 1, 1), (1, 2, 2, 3)),
    box((2, 3, 1, 1), (2, 3, 5, 6)),
    box((2, 3, 1, 1), (5, 6, 1, 1)),
))


fractions_01 = st.fractions(min_value=0, max_value=1, max_denominator=64)


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=2, max_value=6),
       st.data())
def test_split_partitions_the_region(d, arity, data):
    axis = data.draw(st.integers(min_value=0, max_value=d - 1))
    parts = split(unit_region(d), axis, arity)
    assert len(parts) == arity
    assert sum((p[axis][1] - p[axis][0] for p in parts), F(0)) == 1
    for p1, p2 in zip(parts, parts[1:]):
        assert p1[axis][1] == p2[axis][0]
        assert not regions_overlap(p1, p2)


def test_split_validation():
    with pytest.raises(ValueError):
        split(unit_region(2), 0, 1)
    with pytest.raises(ValueError):
        split(unit_region(2), 2, 2)


@given(fractions_01, fractions_01, fractions_01, fractions_01)
def test_scale_map_round_trips(a, b, lo, hi):
    a, b = min(a, b), max(a, b)
    if a == b:
        b = a + F(1, 64)
        if b > 1:
            a, b = F(0), F(1, 64)
    lo = a + (b - a) * lo
    hi = a + (b - a) * hi
    lo, hi = min(lo, hi), max(lo, hi)
    src = ((a, b),)
    dst = ((F(1, 3), F(5, 7)),)
    image = scale_map(src, dst, ((lo, hi),))
    assert region_contains(dst, image)
    assert scale_map(dst, src, image) == ((lo, hi),)


def test_scale_map_requires_containment():
    with pytest.raises(ValueError):
        scale_map(((F(0), F(1, 2)),), ((F(0), F(1)),), ((F(1, 4), F(3, 4)),))


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4))
def test_grid_decomposition_shape(r1, r2):
    g = grid_decomposition((r1, r2))
    assert len(g) == r1 * r2
    assert volume(g) == 1
    assert gcd_of(g) == (r1, r2)
    assert lcm_of(g) == (r1, r2)
    assert is_split_generated(g)


def test_split_chain_stays_in_class():
    dec = trivial_decomposition(2)
    dec = split_decomposition(dec, dec.regions[0], 0, 3)
    assert volume(dec) == 1 and len(dec) == 3
    dec = split_decomposition(dec, dec.regions[1], 1, 4)
    assert volume(dec) == 1 and len(dec) == 6
    assert is_split_generated(dec)
    with pytest.raises(ValueError):
        split_decomposition(dec, unit_region(2), 0, 2)


def test_enumeration_matches_series_counts():
    levels = enumerate_decompositions_up_to(1, 6)
    s1 = decomposition_counts(1, 6)
    assert [len(levels[n]) for n in range(1, 7)] == s1[1:]
    levels2 = enumerate_decompositions_up_to(2, 4)
    s2 = decomposition_counts(2, 4)
    assert [len(levels2[n]) for n in range(1, 5)] == s2[1:]
    assert len(enumerate_decompositions(3, 3)) == decomposition_counts(3, 3)[3]


def test_enumerated_decompositions_are_valid():
    for n, decs in enumerate_decompositions_up_to(2, 3).items():
        for dec in decs:
            assert len(dec) == n
            assert volume(dec) == 1
            assert is_split_generated(dec)
            regs = dec.regions
            for i in range(len(regs)):
                for j in range(i + 1, len(regs)):
                    assert not regions_overlap(regs[i], regs[j])


def test_non_split_partition_detected():
    # a valid partition of (0,1) that no split sequence produces
    dec = interval_dec(F(1, 3), F(1, 2))
    assert volume(dec) == 1
    assert not is_split_generated(dec)


def test_containment_alone_does_not_certify_grid_refinement():
    # every region fits inside a quarter cell, yet the first quarter rescales
    # to the non-split partition {(0,2/3),(2/3,1)}; only the half grid works
    dec = interval_dec(F(1, 6), F(1, 4), F(1, 3), F(1, 2), F(3, 4))
    assert is_split_generated(dec)
    cells = [((F(j, 4), F(j + 1, 4)),) for j in range(4)]
    assert all(
        any(region_contains(c, reg) for c in cells) for reg in dec.regions
    )
    assert not refines_grid(dec, (4,))
    assert refines_grid(dec, (2,))
    assert gcd_of(dec) == (2,)
    sub = restrict_rescale(dec, cells[0])
    assert not is_split_generated(sub)


def test_figure_decompositions_gcd_lcm():
    assert volume(EIGHT) == 1 and volume(ELEVEN) == 1
    assert is_split_generated(EIGHT) and is_split_generated(ELEVEN)
    assert gcd_of(EIGHT) == (3, 1)
    assert lcm_of(EIGHT) == (6, 4)
    assert gcd_of(ELEVEN) == (3, 2)
    assert lcm_of(ELEVEN) == (6, 12)
    assert refines_grid(EIGHT, (3, 1)) and not refines_grid(EIGHT, (3, 2))
    assert refines_grid(ELEVEN, (3, 2)) and refines_grid(ELEVEN, (3, 1))


def test_refines_grid_iff_componentwise_divisor_of_gcd():
    for n, decs in enumerate_decompositions_up_to(2, 4).items():
        for dec in decs:
            g = gcd_of(dec)
            for r1 in range(1, 5):
                for r2 in range(1, 5):
                    expected = g[0] % r1 == 0 and g[1] % r2 == 0
                    assert refines_grid(dec, (r1, r2)) == expected


def test_restrict_rescale_inverts_grid_refinement():
    dec = split_decomposition(
        grid_decomposition((2, 2)), grid_decomposition((2, 2)).regions[0], 1, 3
    )
    cell = box((0, 1, 1, 2), (0, 1, 1, 2))
    sub = restrict_rescale(dec, cell)
    assert sub == grid_decomposition((1, 3))


def test_gcd_lcm_of_trivial():
    t = trivial_decomposition(3)
    assert gcd_of(t) == (1, 1, 1)
    assert lcm_of(t) == (1, 1, 1)


def test_json_round_trip():
    for dec in (EIGHT, ELEVEN, trivial_decomposition(1)):
        data = decomposition_to_json_dict(dec)
        assert decomposition_from_json_dict(data) == dec
    payload = decomposition_to_json_dict(EIGHT)
    assert payload["d"] == 2
    assert all(len(reg) == 2 for reg in payload["regions"])
    assert all(
        isinstance(e, str) for reg in payload["regions"] for iv in reg for e in iv
    )
