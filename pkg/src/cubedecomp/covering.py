"""Natural exact covering systems (NECS) and their bijection with interval splits.

An exact covering system is a finite set of residue classes a mod n that
partition the integers.  The natural ones are those reachable from {0 mod 1}
by repeatedly replacing one class a mod n with its r-fold split
{a + i*n mod r*n : 0 <= i < r}.  C_m denotes the natural systems with m
classes.

`phi` realizes the bijection S_{1,m} -> C_m: an interval decomposition S with
gcd r decomposes into r blocks; block j's sub-system lifts by
a mod n -> j + r*a mod r*n (integers congruent to j mod r whose quotient
lies in a mod n), which multiplies each modulus by r and hence preserves the
componentwise gcd and lcm of the two worlds.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _gcd, lcm as _lcm
from typing import Dict, List, NamedTuple, Set, Tuple

from . import geometry


class ResidueClass(NamedTuple):
    a: int
    n: int


@dataclass(frozen=True)
class Necs:
    """A natural exact covering system, classes sorted by (modulus, representative)."""

    classes: Tuple[ResidueClass, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "classes", tuple(sorted(self.classes, key=lambda c: (c.n, c.a)))
        )

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def make_class(a: int, n: int) -> ResidueClass:
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    return ResidueClass(a % n, n)


def trivial_necs() -> Necs:
    return Necs((ResidueClass(0, 1),))


def split_class(c: ResidueClass, r: int) -> Tuple[ResidueClass, ...]:
    """The r classes a + i*n mod r*n partitioning a mod n."""
    if r < 2:
        raise ValueError(f"split arity must be >= 2, got {r}")
    return tuple(ResidueClass(i * c.n + c.a, r * c.n) for i in range(r))


def split_necs(system: Necs, c: ResidueClass, r: int) -> Necs:
    if c not in system.classes:
        raise ValueError("class is not part of the system")
    rest = tuple(x for x in system.classes if x != c)
    return Necs(rest + split_class(c, r))


def classes_intersect(c1: ResidueClass, c2: ResidueClass) -> bool:
    """CRT: a mod n and b mod m share an integer iff a = b mod gcd(n, m)."""
    return (c1.a - c2.a) % _gcd(c1.n, c2.n) == 0


def is_exact_cover(classes: Tuple[ResidueClass, ...]) -> bool:
    """Pairwise disjoint and densities summing to 1 (hence a partition of Z)."""
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if classes_intersect(classes[i], classes[j]):
                return False
    return sum(Fraction(1, c.n) for c in classes) == 1


def necs_gcd(system: Necs) -> int:
    return _gcd(*(c.n for c in system.classes)) if system.classes else 1


def necs_lcm(system: Necs) -> int:
    return _lcm(*(c.n for c in system.classes)) if system.classes else 1


def enumerate_necs_up_to(max_m: int) -> Dict[int, Set[Necs]]:
    """All natural exact covering systems with at most max_m classes, by size.

    Brute-force oracle mirroring the decomposition enumerator: closure of
    {0 mod 1} under single-class splits, deduplicated canonically.
    """
    levels: Dict[int, Set[Necs]] = {m: set() for m in range(1, max_m + 1)}
    levels[1].add(trivial_necs())
    for m in range(1, max_m):
        for system in levels[m]:
            for idx, c in enumerate(system.classes):
                rest = system.classes[:idx] + system.classes[idx + 1:]
                for r in range(2, max_m - m + 2):
                    levels[m + r - 1].add(Necs(rest + split_class(c, r)))
    return levels


def enumerate_necs(m: int) -> Set[Necs]:
    """The set C_m of natural exact covering systems with exactly m classes."""
    if m < 1:
        raise ValueError(f"class count must be >= 1, got {m}")
    return enumerate_necs_up_to(m)[m]


def _lift_class(c: ResidueClass, j: int, r: int) -> ResidueClass:
    # Integers x = j mod r with (x - j)/r in a mod n, i.e. x = j + r*a mod r*n.
    return ResidueClass((j + r * c.a) % (r * c.n), r * c.n)


def phi(dec: "geometry.Decomposition") -> Necs:
    """The bijection from 1-dimensional decompositions to natural covering systems.

    Recursion: with r the gcd of dec, block j is (j/r, (j+1)/r); the part of
    dec inside block j rescales to a smaller decomposition whose image lifts
    through _lift_class(., j, r).
    """
    if dec.d != 1:
        raise ValueError(f"phi is defined on 1-dimensional decompositions, got d={dec.d}")
    if len(dec.regions) == 1:
        return trivial_necs()
    (r,) = geometry.gcd_of(dec)
    if r < 2:
        raise ValueError("a nontrivial decomposition must have gcd >= 2")
    classes: List[ResidueClass] = []
    for j in range(r):
        cell = ((Fraction(j, r), Fraction(j + 1, r)),)
        sub = geometry.restrict_rescale(dec, cell)
        for c in phi(sub):
            classes.append(_lift_class(c, j, r))
    return Necs(tuple(classes))


def necs_to_json_dict(system: Necs) -> dict:
    return {"classes": [{"a": c.a, "n": c.n} for c in system.classes]}


def necs_from_json_dict(data: dict) -> Necs:
    return Necs(tuple(make_class(int(c["a"]), int(c["n"])) for c in data["classes"]))
