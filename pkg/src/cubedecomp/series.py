"""Exact truncated power series and the counting sequences they generate.

Everything here is integer arithmetic on dense coefficient lists.  The three
central series, all tied to the d-fold Moebius function mu_d:

  * M_d(x)   = sum_{n>=1} mu_d(n) x^n            (`mobius_series`)
  * y_d(x)   = sum_{n>=1} s_d(n) x^n, the compositional inverse of M_d;
               s_d(n) counts n-region axis-split decompositions of (0,1)^d
               (`decomposition_counts`)
  * z/M_d(z) = sum_{n>=0} a_d(n) z^n, the auxiliary nonnegative coefficients
               (`auxiliary_counts`)

The inverse is computed by Lagrange inversion through the auxiliary series:
y = x*phi(y) with phi(z) = z/M_d(z), hence n*s_d(n) = [z^(n-1)] phi(z)^n.
One truncated multiplication per coefficient, all of them nonnegative.
`_revert_by_extraction` is a slower independent scheme kept as a cross-check.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .number_theory import mobius_d_values


def _mul_trunc(a: Sequence[int], b: Sequence[int], order: int) -> List[int]:
    """Coefficients 0..order of the product of two dense coefficient lists."""
    la, lb = len(a), len(b)
    br = b[::-1]
    out = []
    for n in range(order + 1):
        lo = max(0, n - lb + 1)
        hi = min(n, la - 1)
        if lo > hi:
            out.append(0)
        else:
            # b[n-i] for i = lo..hi is the contiguous slice br[lb-1-n+lo : lb-1-n+hi+1]
            out.append(sum(map(int.__mul__, a[lo:hi + 1], br[lb - 1 - n + lo:lb - n + hi])))
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series known exactly through x^order, with integer coefficients."""

    coeffs: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1])))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1])))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(_mul_trunc(self.coeffs, other.coeffs, n)))

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * v for v in self.coeffs))

    def power(self, k: int) -> "TruncatedSeries":
        """self**k truncated at self.order, by repeated multiplication."""
        if k < 0:
            raise ValueError(f"power must be >= 0, got {k}")
        result = TruncatedSeries((1,) + (0,) * self.order)
        for _ in range(k):
            result = result * self
        return result

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)); inner must have zero constant term.

        Horner scheme: c_0 + inner*(c_1 + inner*(c_2 + ...)).  Truncation stays
        exact because inner has valuation >= 1.
        """
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        order = min(self.order, inner.order)
        acc = TruncatedSeries((self.coeffs[order],) + (0,) * order)
        for k in range(order - 1, -1, -1):
            acc = acc * inner
            acc = TruncatedSeries((acc.coeffs[0] + self.coeffs[k],) + acc.coeffs[1:])
        return acc

    def to_decimal_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]


def series_from_list(coeffs: Sequence[int]) -> TruncatedSeries:
    return TruncatedSeries(tuple(int(c) for c in coeffs))


def mobius_series(d: int, order: int) -> TruncatedSeries:
    """M_d(x) = sum mu_d(n) x^n through x^order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return TruncatedSeries(tuple(mobius_d_values(d, order)))


def auxiliary_counts(d: int, max_n: int) -> List[int]:
    """a_d(0..max_n) with z/M_d(z) = sum a_d(n) z^n.

    Recurrence from M_d(z) * sum a_d(i) z^i = z:
    a_d(0) = 1,  a_d(n) = -sum_{k=2}^{n+1} mu_d(k) a_d(n+1-k).
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    mu = mobius_d_values(d, max_n + 1)
    a = [1] + [0] * max_n
    for n in range(1, max_n + 1):
        a[n] = -sum(mu[k] * a[n + 1 - k] for k in range(2, n + 2))
    return a


def decomposition_counts(d: int, max_n: int) -> List[int]:
    """[0, s_d(1), ..., s_d(max_n)]: coefficients of the inverse of M_d.

    Lagrange inversion: n*s_d(n) = [z^(n-1)] phi(z)^n with phi = z/M_d(z).
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    phi = auxiliary_counts(d, max_n - 1)
    s = [0] * (max_n + 1)
    p = list(phi)
    s[1] = p[0]
    for n in range(2, max_n + 1):
        p = _mul_trunc(p, phi, max_n - 1)
        q, r = divmod(p[n - 1], n)
        if r:
            raise ArithmeticError(f"inversion coefficient at n={n} not divisible by n")
        s[n] = q
    return s


def decomposition_series(d: int, order: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(decomposition_counts(d, order)))


def _revert_by_extraction(d: int, max_n: int) -> List[int]:
    """Independent reversion: iterative coefficient extraction.

    s(1) = 1 and s(n) = -sum_{k=2}^{n} mu_d(k) [x^n] y^k using only earlier
    coefficients ([x^n] y^k never involves s(n) for k >= 2).  Quartic-time;
    used as a cross-check at moderate orders.
    """
    mu = mobius_d_values(d, max_n)
    y = [0] * (max_n + 1)
    y[1] = 1
    for n in range(2, max_n + 1):
        # y[n] is still 0 here; harmless, since [x^n] y^k for k >= 2 never uses it.
        p = _mul_trunc(y, y, n)
        total = mu[2] * p[n]
        for k in range(3, n + 1):
            p = _mul_trunc(p, y, n)
            if mu[k]:
                total += mu[k] * p[n]
        y[n] = -total
    return y


def refined_counts(d: int, r: Tuple[int, ...], max_n: int) -> List[int]:
    """[x^n] counts of n-region decompositions of (0,1)^d with grid-gcd exactly r.

    Generating function sum_{m>=1} mu_d(m) y(x)^(P*m) with P = prod(r_i):
    replacing a decomposition's gcd grid cells by arbitrary sub-decompositions
    and Moebius-inverting over coarsenings.
    """
    if len(r) != d:
        raise ValueError(f"refinement vector has length {len(r)}, expected d={d}")
    if any(ri < 1 for ri in r):
        raise ValueError(f"refinement arities must be >= 1, got {r}")
    prod = 1
    for ri in r:
        prod *= ri
    out = [0] * (max_n + 1)
    if prod > max_n:
        return out
    y = decomposition_counts(d, max_n)
    mu = mobius_d_values(d, max_n // prod)
    yp = [1] + [0] * max_n          # y^(P*m), starting at m=0
    y_pow_prod = [0] + y[1:]
    for _ in range(prod - 1):
        y_pow_prod = _mul_trunc(y_pow_prod, y, max_n)
    m = 0
    while (m + 1) * prod <= max_n:
        m += 1
        yp = _mul_trunc(yp, y_pow_prod, max_n)
        if mu[m]:
            for n in range(m * prod, max_n + 1):
                out[n] += mu[m] * yp[n]
    return out
