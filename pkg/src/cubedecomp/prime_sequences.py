"""Coloured prime multisets, signed sequences, and the sign-reversing involution.

A d-coloured prime set is a multiset of primes, each assigned a colour in
1..d, with equal primes receiving distinct colours; represented canonically
as a tuple of (prime, colour) pairs sorted ascending.  Its weight is
prod(primes) - 1 and its sign is (-1)^(size+1).

B_{d,n}: the sets of weight n (so prod = n+1; the exponent of each prime in
n+1 picks how many distinct colours it uses, impossible past exponent d).
A_{d,n}: sequences of nonempty sets with total weight n.  The signed count
of A_{d,n} equals the auxiliary coefficient a_d(n).

The partner map `involution` acts on every sequence that contains an
even-sized set or an odd-arity repetition run (OAR): it splits the first
even set at its smallest (prime, colour) element, or merges the first OAR
run, flipping the sign either way.  For d = 1 this pairs the non-reduced
sequences perfectly, so the reduced count equals a_1(n).  For d >= 2 two
distinct sequences can share an image (see `involution`), so the reduced
count can exceed a_d(n) even though the signed count always equals it.
Appending a weight-1 set (with a repair step when that would create an
OAR) injects reduced level n into reduced level n+1, so the reduced
counts never decrease.
"""

from itertools import combinations
from math import prod
from typing import Iterator, List, Optional, Tuple

from .number_theory import factorize

ColouredPrime = Tuple[int, int]          # (prime, colour)
PrimeSet = Tuple[ColouredPrime, ...]     # sorted by (prime, colour)
PrimeSequence = Tuple[PrimeSet, ...]


def set_weight(s: PrimeSet) -> int:
    return prod(p for p, _ in s) - 1


def set_sign(s: PrimeSet) -> int:
    return 1 if len(s) % 2 == 1 else -1


def sequence_weight(seq: PrimeSequence) -> int:
    return sum(set_weight(s) for s in seq)


def sequence_sign(seq: PrimeSequence) -> int:
    v = 1
    for s in seq:
        v *= set_sign(s)
    return v


def enumerate_B(d: int, n: int) -> List[PrimeSet]:
    """All d-coloured prime sets of weight n >= 1, sorted canonically.

    Empty for n = 0: a set here always has at least one element.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if n < 0:
        raise ValueError(f"weight must be >= 0, got {n}")
    if n == 0:
        return []
    choices: List[List[PrimeSet]] = []
    for p, m in factorize(n + 1):
        if m > d:
            return []
        choices.append([tuple((p, c) for c in cols) for cols in combinations(range(1, d + 1), m)])
    sets = [()]
    for ch in choices:
        sets = [s + extra for s in sets for extra in ch]
    return sorted(sets)


def iter_sequences(d: int, n: int) -> Iterator[PrimeSequence]:
    """All sequences of nonempty d-coloured prime sets with total weight n.

    Lazy; distinct by construction (first-set weight then recursion).
    """
    if n == 0:
        yield ()
        return
    for w in range(1, n + 1):
        first_sets = enumerate_B(d, w)
        if not first_sets:
            continue
        for rest in iter_sequences(d, n - w):
            for s in first_sets:
                yield (s,) + rest


def enumerate_A(d: int, n: int) -> List[PrimeSequence]:
    """The set A_{d,n} as a sorted list."""
    return sorted(iter_sequences(d, n))


def signed_sum(d: int, n: int) -> int:
    """Sum of sequence signs over A_{d,n}; equals the auxiliary count a_d(n)."""
    if n == 0:
        return 1
    return sum(sequence_sign(seq) for seq in iter_sequences(d, n))


def first_even_set(seq: PrimeSequence) -> Optional[int]:
    """0-based index of the first even-sized set, or None."""
    for i, s in enumerate(seq):
        if len(s) % 2 == 0:
            return i
    return None


def find_oar(seq: PrimeSequence) -> Optional[Tuple[int, int]]:
    """Earliest odd-arity repetition run: (start, ell), 0-based start, or None.

    A run starting at j needs A_j = {ell} a singleton prime, followed by
    exactly ell equal odd-sized sets, each of whose elements exceeds ell or
    equals ell with a colour above A_j's.
    """
    k = len(seq)
    for j in range(k):
        s = seq[j]
        if len(s) != 1:
            continue
        ell, c0 = s[0]
        if j + ell >= k:
            continue
        nxt = seq[j + 1]
        if len(nxt) % 2 == 0:
            continue
        if any(seq[j + t] != nxt for t in range(2, ell + 1)):
            continue
        if all(p > ell or (p == ell and c > c0) for p, c in nxt):
            return (j, ell)
    return None


def involution(seq: PrimeSequence) -> PrimeSequence:
    """Weight-preserving, sign-reversing partner map on sequences that
    contain an even set or an OAR run.

    Whichever comes first wins:
      * even set at i: remove its smallest (prime, colour) element p0 and
        replace the set by ({p0}, then p0 copies of the remainder);
      * OAR run at j with singleton value p0: replace the run's first two
        sets by their union and drop the remaining p0 - 1 copies.

    A true involution for d = 1.  For d >= 2 it is not: splitting an even
    set can create overlapping OAR runs, letting two distinct sequences
    map to the same image.  Smallest case d = 3, n = 5, where
    ({2_1}, {2_2}, {2_2 2_3}) and ({2_1 2_2}, {2_3}, {2_3}) both map to
    ({2_1}, {2_2}, {2_2}, {2_3}, {2_3}), whose partner is only the latter.
    """
    i1 = first_even_set(seq)
    oar = find_oar(seq)
    i2 = oar[0] if oar is not None else None
    if i1 is None and i2 is None:
        raise ValueError("sequence has no even set and no repetition run")
    if i2 is None or (i1 is not None and i1 < i2):
        s = seq[i1]
        p0 = min(s)
        remainder = tuple(x for x in s if x != p0)
        block = ((p0,),) + (remainder,) * p0[0]
        return seq[:i1] + block + seq[i1 + 1:]
    j, ell = oar
    merged = tuple(sorted(seq[j] + seq[j + 1]))
    return seq[:j] + (merged,) + seq[j + ell + 1:]


def is_reduced(seq: PrimeSequence) -> bool:
    """No even set and no OAR run: the sequences counted by a_d(n)."""
    return first_even_set(seq) is None and find_oar(seq) is None


def enumerate_A_tilde(d: int, n: int) -> List[PrimeSequence]:
    """The reduced sequences of weight n, sorted.

    For d = 1 the count equals a_1(n); for d >= 2 it can exceed a_d(n)
    because the partner map orphans some non-reduced sequences (first at
    d = 2, n = 7: 768 reduced vs a_2(7) = 766).
    """
    return sorted(seq for seq in iter_sequences(d, n) if is_reduced(seq))


def ratio_injection(seq: PrimeSequence, colour: int) -> PrimeSequence:
    """Inject a reduced weight-n sequence into the reduced weight-(n+1) set.

    Appends {2_colour}; if the tail already reads {2_c'}, {2_colour} with
    c' < colour (so appending would complete an OAR run), the two copies of
    {2_colour} collapse into {3_colour} instead.
    """
    new = ((2, colour),)
    if (
        len(seq) >= 2
        and seq[-1] == new
        and len(seq[-2]) == 1
        and seq[-2][0][0] == 2
        and seq[-2][0][1] < colour
    ):
        return seq[:-1] + (((3, colour),),)
    return seq + (new,)


def sequence_to_json(seq: PrimeSequence) -> list:
    """Lists of lists of {"p": prime, "colour": colour}."""
    return [[{"p": p, "colour": c} for p, c in s] for s in seq]


def sequence_from_json(data: list) -> PrimeSequence:
    return tuple(tuple(sorted((int(e["p"]), int(e["colour"])) for e in s)) for s in data)
