"""Growth analytics for the decomposition counts.

The ordinary generating series of the signed splitting weights,
M_d(x) = sum mu_d(n) x^n, has a positive radius of convergence, and the
counts' growth constant is K_d = 1/M_d(s) where s is the first positive root
of M_d'.  Everything here evaluates M_d and its first two derivatives in
binary64 from partial sums through n < 2^k, together with a certified bound
on the discarded tail, so sign decisions made during root finding are
genuinely rigorous (up to binary64 rounding, which is orders of magnitude
below the tolerances used).

Tail bounds.  A dyadic block n in [2^l, 2^(l+1)) has at most l prime factors
with multiplicity, so |mu_d(n)| <= d^l there; summing blocks geometrically
gives, for d >= 2 and k >= 3,

    |sum_{n >= 2^k} mu_d(n) x^n|          <= 2 d^k x^(2^k)        on [0, 1/d],
    |sum_{n >= 2^k} n mu_d(n) x^(n-1)|    <= 2^(k+1) d^k x^(2^k-1) on [0, 1/(2d)],
    |sum_{n >= 2^k} n(n-1) mu_d(n) x^(n-2)|
        <= 4^(k+1) d^k x^(2^k-2) / ((1-x)(1-4d x^(2^k)))  while 4d x^(2^k) < 1,

the last by the same block argument with n(n-1) < 4^(l+1) on block l.  For
d = 1, |mu(n)| <= 1 and the exact geometric tails are used instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

from .number_theory import mobius_d_values

DEFAULT_K = 6
DEFAULT_TOL = 1e-12

_MU_TABLES: Dict[Tuple[int, int], Tuple[int, ...]] = {}


def _mu_table(d: int, k: int) -> Tuple[int, ...]:
    key = (d, k)
    table = _MU_TABLES.get(key)
    if table is None:
        table = tuple(mobius_d_values(d, 2 ** k - 1))
        _MU_TABLES[key] = table
    return table


def _check_args(d: int, x: float, k: int, upper: float) -> None:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if d >= 2 and k < 3:
        raise ValueError(f"tail bounds need k >= 3 for d >= 2, got k={k}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 0 <= x <= upper:
        raise ValueError(f"x={x} outside certified range [0, {upper}] for d={d}")


def eval_M(d: int, x: float, k: int = DEFAULT_K) -> Tuple[float, float]:
    """(partial sum of M_d at x through n < 2^k, certified tail magnitude)."""
    _check_args(d, x, k, 1 / d if d >= 2 else math.nextafter(1.0, 0.0))
    mu = _mu_table(d, k)
    value = 0.0
    for n in range(2 ** k - 1, 0, -1):
        value = value * x + mu[n]
    value *= x
    big_n = 2 ** k
    if d == 1:
        tail = x ** big_n / (1 - x)
    else:
        tail = 2.0 * d ** k * x ** big_n
    return value, tail


def eval_M_prime(d: int, x: float, k: int = DEFAULT_K) -> Tuple[float, float]:
    """(partial sum of M_d' at x through n < 2^k, certified tail magnitude)."""
    _check_args(d, x, k, 1 / (2 * d) if d >= 2 else math.nextafter(1.0, 0.0))
    mu = _mu_table(d, k)
    value = 0.0
    for n in range(2 ** k - 1, 1, -1):
        value = (value + n * mu[n]) * x
    value += mu[1]
    big_n = 2 ** k
    if d == 1:
        tail = x ** (big_n - 1) * (big_n / (1 - x) + x / (1 - x) ** 2)
    else:
        tail = 2.0 ** (k + 1) * d ** k * x ** (big_n - 1)
    return value, tail


def eval_M_second(d: int, x: float, k: int = DEFAULT_K) -> Tuple[float, float]:
    """(partial sum of M_d'' at x through n < 2^k, certified tail magnitude)."""
    _check_args(d, x, k, math.nextafter(1.0, 0.0))
    big_n = 2 ** k
    if d >= 2 and 4 * d * x ** big_n >= 1:
        raise ValueError(f"second-derivative tail bound needs 4*d*x^(2^k) < 1 at x={x}")
    mu = _mu_table(d, k)
    value = 0.0
    for n in range(2 ** k - 1, 2, -1):
        value = (value + n * (n - 1) * mu[n]) * x
    value += 2 * mu[2]
    if d == 1:
        one = 1 - x
        tail = (big_n * (big_n - 1) * x ** (big_n - 2) / one
                + 2 * big_n * x ** (big_n - 1) / one ** 2
                + 2 * x ** big_n / one ** 3)
    else:
        tail = (4.0 ** (k + 1) * d ** k * x ** (big_n - 2)
                / ((1 - x) * (1 - 4 * d * x ** big_n)))
    return value, tail


@dataclass(frozen=True)
class SaddleResult:
    """Located maximum of M_d on (0, 1) and the growth data derived from it."""

    d: int
    s: float
    M_at_s: float
    M2_at_s: float
    growth_rate: float
    truncation_order: int
    tail_bound_used: float

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "s": self.s,
            "M_at_s": self.M_at_s,
            "M2_at_s": self.M2_at_s,
            "growth_rate": self.growth_rate,
            "truncation_order": self.truncation_order,
            "tail_bound_used": self.tail_bound_used,
        }


def saddle_bracket(d: int) -> Tuple[float, float]:
    """Interval known to contain the root of M_d'.

    For d >= 2 these are the closed-form endpoints used to prove the growth
    bounds (k1 below the root, k2 above, both < 1/(2d)); for d = 1 a fixed
    interval found by scanning.
    """
    if d == 1:
        return 0.1, 0.45
    k1 = (4 * d + 5) / ((4 * d + 5) * (2 * d + 1) + 1)
    k2 = (d - 1) / d * k1 + 1 / (d * (2 * d + 1))
    return k1, k2


def find_saddle(d: int, tol: float = DEFAULT_TOL, k: int = DEFAULT_K) -> SaddleResult:
    """Bisect M_d' to its root with tail-certified signs at every step."""
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo, hi = saddle_bracket(d)
    max_tail = 0.0

    def signed(x: float) -> Tuple[float, float]:
        value, tail = eval_M_prime(d, x, k)
        if tail >= tol / 10:
            raise ValueError(
                f"tail bound {tail} at x={x} too large for tol={tol}; increase k")
        return value, tail

    f_lo, tail = signed(lo)
    max_tail = max(max_tail, tail)
    # the closed-form lo certifies a majorant's sign, not M_d's own; back off
    # toward 0 (where M_d'(x) -> 1) in the rare case the true sign is uncertain
    while f_lo - tail <= 0:
        lo /= 2
        if lo < 1e-6:
            raise RuntimeError(f"no certified positive left endpoint for d={d}")
        f_lo, tail = signed(lo)
        max_tail = max(max_tail, tail)
    f_hi, tail = signed(hi)
    max_tail = max(max_tail, tail)
    if f_hi + tail >= 0:
        raise RuntimeError(
            f"right endpoint {hi} not certified negative for d={d}: "
            f"M'={f_hi} tail={tail}")

    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # interval at binary64 resolution
            break
        f_mid, tail = signed(mid)
        max_tail = max(max_tail, tail)
        if f_mid > 0:
            lo = mid
        else:
            hi = mid
    s = 0.5 * (lo + hi)
    f_s, tail = signed(s)
    max_tail = max(max_tail, tail)
    if abs(f_s) > tol:
        raise RuntimeError(f"bisection stalled: |M'({s})| = {abs(f_s)} > {tol}")

    m_value, tail = eval_M(d, s, k)
    max_tail = max(max_tail, tail)
    m2_value, tail = eval_M_second(d, s, k)
    max_tail = max(max_tail, tail)
    if not m2_value < 0:
        raise RuntimeError(f"second derivative {m2_value} not negative at s={s}")
    return SaddleResult(
        d=d,
        s=s,
        M_at_s=m_value,
        M2_at_s=m2_value,
        growth_rate=1 / m_value,
        truncation_order=2 ** k,
        tail_bound_used=max_tail,
    )


def log_asymptotic_estimate(d: int, n: int, saddle: SaddleResult | None = None) -> float:
    """Natural log of the first-order saddle-point estimate of the n-th count.

    log of n^(-3/2) M_d(s)^(1/2 - n) / sqrt(-2 pi M_d''(s)); usable far past
    the n where the estimate itself leaves binary64 range.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if saddle is None:
        saddle = find_saddle(d)
    return (-1.5 * math.log(n)
            + (0.5 - n) * math.log(saddle.M_at_s)
            - 0.5 * math.log(-2 * math.pi * saddle.M2_at_s))


def asymptotic_estimate(d: int, n: int, saddle: SaddleResult | None = None) -> float:
    """First-order saddle-point estimate of the n-th decomposition count.

    Exponentiates log_asymptotic_estimate; returns inf if the value exceeds
    binary64 range.
    """
    try:
        return math.exp(log_asymptotic_estimate(d, n, saddle))
    except OverflowError:
        return math.inf


def check_growth_bounds(d: int, tol: float = DEFAULT_TOL, k: int = DEFAULT_K) -> bool:
    """Whether K_d lies in [4d + 3/2, 4d + 3/2 + 1/(16d)]; defined for d >= 2 only."""
    if d < 2:
        raise ValueError(f"growth bounds are stated for d >= 2 only, got d={d}")
    rate = find_saddle(d, tol=tol, k=k).growth_rate
    lower = 4 * d + 1.5
    return lower <= rate <= lower + 1 / (16 * d)
