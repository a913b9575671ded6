"""Counting decompositions by the grid they refine and by their exact lcm.

For a vector r = (r_1..r_d) of positive integers, g(r) counts the
decompositions of the d-cube refined by the grid D_r, and h(r) counts those
whose lcm is exactly r.  Both satisfy inclusion-exclusion recursions over the
divisor lattice:

    g(r) = 1 - sum_{q_i | r_i, prod q_i != 1} (prod mu(q_i)) g(r/q)^(prod q_i)
    h(r) = sum_{q_i | r_i} (prod mu(q_i)) g(r/q)

with g(1,..,1) = h(1,..,1) = 1 (componentwise division r/q).  The g recursion
comes from peeling one splitting round off every decomposition refined by the
grid; the tower of exponents prod q_i makes values explode quickly, hence big
integers throughout.  Both functions are symmetric in the coordinates and
collapse on coprime entries: g(r_1..r_d) = g(prod r_i) when the r_i are
pairwise coprime (and likewise h), so the d = 1 columns determine the rest.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .number_theory import divisors, mobius_cached

LcmKey = Tuple[int, ...]

_G_CACHE: Dict[LcmKey, int] = {}
_G_SYMMETRIC: Dict[LcmKey, int] = {}


def _check_key(r: LcmKey) -> None:
    if len(r) < 1 or any(ri < 1 for ri in r):
        raise ValueError(f"entries must be positive integers, got {r}")


def _divisor_vectors(r: LcmKey) -> Tuple[Tuple[LcmKey, int], ...]:
    """All (q, prod(q)) with q_i | r_i; mu(q_i) = 0 terms are kept and pruned by the caller."""
    vecs: Tuple[Tuple[LcmKey, int], ...] = (((), 1),)
    for ri in r:
        vecs = tuple((q + (qi,), prod * qi) for q, prod in vecs for qi in divisors(ri))
    return vecs


def g_count(r: LcmKey) -> int:
    """Number of decompositions refined by the grid with arity vector r."""
    _check_key(r)
    r = tuple(r)
    cached = _G_CACHE.get(r)
    if cached is not None:
        return cached
    key = tuple(sorted(r))  # symmetric in the coordinates
    value = _G_SYMMETRIC.get(key)
    if value is None:
        if all(ri == 1 for ri in r):
            value = 1
        else:
            total = 0
            for q, prod in _divisor_vectors(r):
                if prod == 1:
                    continue
                sign = 1
                for qi in q:
                    m = mobius_cached(qi)
                    if m == 0:
                        sign = 0
                        break
                    sign *= m
                if sign == 0:
                    continue
                inner = g_count(tuple(ri // qi for ri, qi in zip(r, q)))
                total += sign * inner ** prod
            value = 1 - total
        _G_SYMMETRIC[key] = value
    _G_CACHE[r] = value
    return value


def h_count(r: LcmKey) -> int:
    """Number of decompositions whose lcm is exactly r."""
    _check_key(r)
    r = tuple(r)
    total = 0
    for q, _ in _divisor_vectors(r):
        sign = 1
        for qi in q:
            m = mobius_cached(qi)
            if m == 0:
                sign = 0
                break
            sign *= m
        if sign == 0:
            continue
        total += sign * g_count(tuple(ri // qi for ri, qi in zip(r, q)))
    return total
