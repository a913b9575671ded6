"""Exact geometry of axis-split decompositions of the open unit d-cube.

A region is a d-tuple of open intervals ((lo, hi), ...) with Fraction
endpoints; a decomposition is a canonically sorted tuple of regions obtained
from the trivial decomposition {(0,1)^d} by repeatedly replacing one region
with p >= 2 equal slabs along one axis.  All arithmetic is exact.

Refinement is the split order: S refines S' when S is obtainable from S' by
further splits.  S refines the grid D_r iff every region lies inside a single
grid cell AND the restriction to each cell, rescaled to the unit cube, is
itself split-generated (containment alone is not enough: {(0,1/6), (1/6,1/4),
(1/4,1/3), (1/3,1/2), (1/2,3/4), (3/4,1)} fits the quarter grid cellwise but
its first cell rescales to the non-split {(0,2/3), (2/3,1)}).

Key structural facts used here:
  * any r_i with S refining the single-axis r_i-grid divides the lcm of the
    coordinate-i endpoint denominators, so gcd_of can search divisors;
  * the split-feasible grid set is closed under componentwise lcm, so the
    maximum feasible divisor along each axis is the gcd grid.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Dict, Iterable, List, Set, Tuple

Interval = Tuple[Fraction, Fraction]
Region = Tuple[Interval, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Decomposition:
    """A finite set of disjoint open boxes tiling (0,1)^d, in canonical sorted order."""

    d: int
    regions: Tuple[Region, ...]

    def __post_init__(self):
        object.__setattr__(self, "regions", tuple(sorted(self.regions)))

    def __len__(self) -> int:
        return len(self.regions)

    def __iter__(self):
        return iter(self.regions)


def unit_region(d: int) -> Region:
    return ((ZERO, ONE),) * d


def trivial_decomposition(d: int) -> Decomposition:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return Decomposition(d, (unit_region(d),))


def split(region: Region, axis: int, arity: int) -> Tuple[Region, ...]:
    """Split a region into `arity` equal open slabs along `axis` (0-based).

    Cut points are lo + j*(hi-lo)/arity for j = 1..arity-1; slabs come back in
    ascending order along the axis.
    """
    if arity < 2:
        raise ValueError(f"arity must be >= 2, got {arity}")
    if not 0 <= axis < len(region):
        raise ValueError(f"axis {axis} out of range for dimension {len(region)}")
    lo, hi = region[axis]
    step = (hi - lo) / arity
    parts = []
    for j in range(arity):
        iv = (lo + j * step, lo + (j + 1) * step)
        parts.append(region[:axis] + (iv,) + region[axis + 1:])
    return tuple(parts)


def split_decomposition(dec: Decomposition, region: Region, axis: int, arity: int) -> Decomposition:
    """Replace one region of dec by its arity-fold split along axis."""
    if region not in dec.regions:
        raise ValueError("region is not part of the decomposition")
    rest = tuple(r for r in dec.regions if r != region)
    return Decomposition(dec.d, rest + split(region, axis, arity))


def grid_decomposition(r: Tuple[int, ...]) -> Decomposition:
    """The grid decomposition D_r with r_i equal slabs along axis i."""
    if any(ri < 1 for ri in r):
        raise ValueError(f"grid arities must be >= 1, got {r}")
    axes = [[(Fraction(j, ri), Fraction(j + 1, ri)) for j in range(ri)] for ri in r]
    regions: List[Region] = [()]
    for ivs in axes:
        regions = [reg + (iv,) for reg in regions for iv in ivs]
    return Decomposition(len(r), tuple(regions))


def region_contains(outer: Region, inner: Region) -> bool:
    """Closure containment of open boxes: inner subset of outer."""
    return all(a <= c and d_ <= b for (a, b), (c, d_) in zip(outer, inner))


def regions_overlap(r1: Region, r2: Region) -> bool:
    """Whether two open boxes intersect."""
    return all(max(a, c) < min(b, d_) for (a, b), (c, d_) in zip(r1, r2))


def scale_map(src: Region, dst: Region, region: Region) -> Region:
    """Image of region under the affine map taking box src onto box dst.

    region must lie inside src.
    """
    if not region_contains(src, region):
        raise ValueError("region does not lie inside the source box")
    out = []
    for (a, b), (a2, b2), (lo, hi) in zip(src, dst, region):
        scale = (b2 - a2) / (b - a)
        out.append((a2 + scale * (lo - a), a2 + scale * (hi - a)))
    return tuple(out)


def volume(dec: Decomposition) -> Fraction:
    total = ZERO
    for reg in dec.regions:
        v = ONE
        for lo, hi in reg:
            v *= hi - lo
        total += v
    return total


def _axis_cells_ok(dec: Decomposition, axis: int, r: int) -> bool:
    # Necessary condition: every region's axis-interval inside one cell (j/r, (j+1)/r).
    for reg in dec.regions:
        lo, hi = reg[axis]
        j = floor(lo * r)
        if hi * r > j + 1:
            return False
    return True


_SPLIT_GENERATED_CACHE: Dict[Tuple[int, Tuple[Region, ...]], bool] = {}


def _axis_restrictions(dec: Decomposition, axis: int, r: int) -> List[Decomposition]:
    unit = unit_region(dec.d)
    buckets: List[List[Region]] = [[] for _ in range(r)]
    for reg in dec.regions:
        lo, hi = reg[axis]
        j = floor(lo * r)
        cell = unit[:axis] + ((Fraction(j, r), Fraction(j + 1, r)),) + unit[axis + 1:]
        buckets[j].append(scale_map(cell, unit, reg))
    return [Decomposition(dec.d, tuple(b)) for b in buckets]


def is_split_generated(dec: Decomposition) -> bool:
    """Whether dec arises from the trivial decomposition by iterated equal splits.

    A multi-region dec must admit a first split: some axis and prime arity p
    whose p slabs each contain whole regions that rescale to split-generated
    decompositions.  Trying prime arities only is enough, since refining the
    q-slab grid implies refining the p-slab grid for every prime p | q.
    """
    from .number_theory import factorize

    if len(dec.regions) == 1:
        return dec.regions[0] == unit_region(dec.d)
    key = (dec.d, dec.regions)
    cached = _SPLIT_GENERATED_CACHE.get(key)
    if cached is not None:
        return cached
    ok = False
    for axis in range(dec.d):
        m = 1
        for reg in dec.regions:
            lo, hi = reg[axis]
            m = lcm(m, lo.denominator, hi.denominator)
        for p, _ in factorize(m):
            if _axis_cells_ok(dec, axis, p):
                if all(is_split_generated(sub) for sub in _axis_restrictions(dec, axis, p)):
                    ok = True
                    break
        if ok:
            break
    _SPLIT_GENERATED_CACHE[key] = ok
    return ok


def refines_grid(dec: Decomposition, r: Tuple[int, ...]) -> bool:
    """Whether dec refines D_r in the split order.

    True iff each grid cell contains whole regions only and its restriction,
    rescaled to the unit cube, is split-generated.
    """
    if len(r) != dec.d:
        raise ValueError(f"grid vector has length {len(r)}, expected {dec.d}")
    if any(ri < 1 for ri in r):
        raise ValueError(f"grid arities must be >= 1, got {r}")
    if not all(_axis_cells_ok(dec, i, ri) for i, ri in enumerate(r)):
        return False
    unit = unit_region(dec.d)
    for cell in grid_decomposition(r).regions:
        sub = [scale_map(cell, unit, reg) for reg in dec.regions if region_contains(cell, reg)]
        if not is_split_generated(Decomposition(dec.d, tuple(sub))):
            return False
    return True


def lcm_of(dec: Decomposition) -> Tuple[int, ...]:
    """Componentwise-minimal grid refining dec: lcm of endpoint denominators.

    A grid refines dec iff every endpoint lies on it (the cells inside each
    region then form a product grid, which is always split-generated).
    """
    out = []
    for axis in range(dec.d):
        m = 1
        for reg in dec.regions:
            lo, hi = reg[axis]
            m = lcm(m, lo.denominator, hi.denominator)
        out.append(m)
    return tuple(out)


def gcd_of(dec: Decomposition) -> Tuple[int, ...]:
    """Componentwise-maximal grid that dec refines (split order).

    Per axis, split-feasible r divide lcm_of(dec) and are closed under lcm,
    so the per-axis maximum over divisors is attained and jointly feasible.
    """
    from .number_theory import divisors

    out = []
    for axis, m in enumerate(lcm_of(dec)):
        best = 1
        for r in divisors(m):
            if (
                r > best
                and _axis_cells_ok(dec, axis, r)
                and all(is_split_generated(s) for s in _axis_restrictions(dec, axis, r))
            ):
                best = r
        out.append(best)
    return tuple(out)


def restrict_rescale(dec: Decomposition, cell: Region) -> Decomposition:
    """Regions of dec inside cell, rescaled to a decomposition of the unit cube.

    Raises if any region straddles the cell boundary.
    """
    unit = unit_region(dec.d)
    inside = []
    for reg in dec.regions:
        if region_contains(cell, reg):
            inside.append(scale_map(cell, unit, reg))
        elif regions_overlap(cell, reg):
            raise ValueError("a region straddles the cell boundary")
    return Decomposition(dec.d, tuple(inside))


def enumerate_decompositions_up_to(d: int, max_n: int) -> Dict[int, Set[Decomposition]]:
    """All decompositions with at most max_n regions, keyed by region count.

    Brute-force oracle: breadth-first closure of the trivial decomposition
    under single-region splits, deduplicated by canonical form.  A split of
    arity p adds p-1 regions, so from a level-m decomposition arity is capped
    at max_n - m + 1.
    """
    levels: Dict[int, Set[Decomposition]] = {m: set() for m in range(1, max_n + 1)}
    levels[1].add(trivial_decomposition(d))
    for m in range(1, max_n):
        for dec in levels[m]:
            for idx, reg in enumerate(dec.regions):
                rest = dec.regions[:idx] + dec.regions[idx + 1:]
                for axis in range(d):
                    for arity in range(2, max_n - m + 2):
                        new = Decomposition(d, rest + split(reg, axis, arity))
                        levels[m + arity - 1].add(new)
    return levels


def enumerate_decompositions(d: int, n: int) -> Set[Decomposition]:
    """The set S_{d,n} of decompositions with exactly n regions."""
    if n < 1:
        raise ValueError(f"region count must be >= 1, got {n}")
    return enumerate_decompositions_up_to(d, n)[n]


def decomposition_to_json_dict(dec: Decomposition) -> dict:
    """JSON form with exact endpoints as "num/den" strings."""
    return {
        "d": dec.d,
        "regions": [[[str(lo), str(hi)] for lo, hi in region] for region in dec.regions],
    }


def decomposition_from_json_dict(data: dict) -> Decomposition:
    d = int(data["d"])
    regions = tuple(
        tuple((Fraction(lo), Fraction(hi)) for lo, hi in region)
        for region in data["regions"]
    )
    for region in regions:
        if len(region) != d:
            raise ValueError(f"region {region} does not have {d} intervals")
    return Decomposition(d, regions)
