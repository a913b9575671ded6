"""Generalized Moebius functions and Dirichlet convolution.

mu_d is the d-fold Dirichlet self-convolution of the classical Moebius
function mu.  On n = p_1^m_1 * ... * p_k^m_k it has the closed form

    mu_d(n) = prod_i (-1)^m_i * C(d, m_i)

(so mu_d(n) = 0 as soon as some exponent exceeds d), which is what
`mobius_d` evaluates.  `dirichlet_convolve` provides the defining route
independently; tests check the two against each other.

Sequences are dense integer lists indexed by n with slot 0 unused (kept 0),
so seq[n] is the value at n for 1 <= n <= len(seq)-1.
"""

from math import comb
from typing import Dict, List, Tuple

_SPF_LIMIT = 0
_SPF: List[int] = []


def _grow_sieve(limit: int) -> None:
    """Extend the smallest-prime-factor sieve to cover 2..limit."""
    global _SPF_LIMIT, _SPF
    if limit <= _SPF_LIMIT:
        return
    limit = max(limit, 2 * _SPF_LIMIT, 1 << 10)
    spf = list(range(limit + 1))
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    _SPF, _SPF_LIMIT = spf, limit


def factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a tuple of (prime, exponent), primes ascending."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n == 1:
        return ()
    out = []
    if n <= 10 ** 7:
        _grow_sieve(n)
        while n > 1:
            p = _SPF[n]
            m = 0
            while n % p == 0:
                n //= p
                m += 1
            out.append((p, m))
    else:
        p = 2
        while p * p <= n:
            if n % p == 0:
                m = 0
                while n % p == 0:
                    n //= p
                    m += 1
                out.append((p, m))
            p += 1 if p == 2 else 2
        if n > 1:
            out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    """Classical Moebius function."""
    return mobius_d(1, n)


def mobius_d(d: int, n: int) -> int:
    """d-fold Moebius function mu_d(n) = prod (-1)^m_i C(d, m_i) over n's factorization.

    d = 0 gives the convolution identity delta(n=1).
    """
    if d < 0:
        raise ValueError(f"mobius_d requires d >= 0, got {d}")
    if n < 1:
        raise ValueError(f"mobius_d requires n >= 1, got {n}")
    result = 1
    for _, m in factorize(n):
        c = comb(d, m) if m <= d else 0
        if c == 0:
            return 0
        result *= (-1) ** m * c
    return result


def mobius_d_values(d: int, max_n: int) -> List[int]:
    """[0, mu_d(1), ..., mu_d(max_n)] as a dense list (slot 0 unused)."""
    return [0] + [mobius_d(d, n) for n in range(1, max_n + 1)]


def dirichlet_convolve(a: List[int], b: List[int]) -> List[int]:
    """Dirichlet convolution (a*b)(n) = sum_{ij=n} a(i)b(j) of dense 1-indexed lists.

    Inputs must have equal length; slot 0 is ignored and zero in the output.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    max_n = len(a) - 1
    out = [0] * (max_n + 1)
    for i in range(1, max_n + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(1, max_n // i + 1):
            if b[j] != 0:
                out[i * j] += ai * b[j]
    return out


def mobius_d_by_convolution(d: int, max_n: int) -> List[int]:
    """mu_d via d-fold self-convolution of mu; the independent slow route."""
    if d < 0:
        raise ValueError(f"requires d >= 0, got {d}")
    delta = [0] * (max_n + 1)
    if max_n >= 1:
        delta[1] = 1
    result = delta
    mu1 = [0] + [mobius(n) for n in range(1, max_n + 1)]
    for _ in range(d):
        result = dirichlet_convolve(result, mu1)
    return result


def divisors(n: int) -> List[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, m in factorize(n):
        divs = [dv * p ** e for dv in divs for e in range(m + 1)]
    return sorted(divs)


_MU_CACHE: Dict[int, int] = {}


def mobius_cached(n: int) -> int:
    v = _MU_CACHE.get(n)
    if v is None:
        v = mobius(n)
        _MU_CACHE[n] = v
    return v
