"""Labelled plane rooted trees and the tree-to-decomposition map.

A tree is a nested tuple: a leaf is the empty tuple ``()``, and an internal
node is ``(label, child_1, ..., child_r)`` with ``label`` in 1..d and r >= 2.
Trees with n leaves map onto n-region decompositions of the d-cube: the root's
label picks an axis, its arity picks an equal split along that axis, and the
children recurse into the resulting slabs from the low end up.  The map is
onto but not injective (an axis-i split of every slab of an axis-i split can
be reparenthesised, and two nested single-axis splits along different axes
commute), so leaf counts t_d(n) strictly dominate the decomposition counts
from n = 4 on.

For d = 1 the labels carry no information and t_1(n) is the n-th small
Schroeder number (1, 1, 3, 11, 45, 197, ...).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Set, Tuple, Union

from .geometry import Decomposition, scale_map, split, trivial_decomposition, unit_region
from .series import TruncatedSeries

PlaneTree = Tuple  # () for a leaf, (label, *children) otherwise

LEAF: PlaneTree = ()


def is_leaf(tree: PlaneTree) -> bool:
    return len(tree) == 0


def leaf_count(tree: PlaneTree) -> int:
    if is_leaf(tree):
        return 1
    return sum(leaf_count(child) for child in tree[1:])


def validate_tree(tree: PlaneTree, d: int) -> None:
    """Raise ValueError unless every internal node has a label in 1..d and >= 2 children."""
    if is_leaf(tree):
        return
    label = tree[0]
    if not isinstance(label, int) or not 1 <= label <= d:
        raise ValueError(f"internal node label {label!r} outside 1..{d}")
    if len(tree) < 3:
        raise ValueError("internal node must have at least 2 children")
    for child in tree[1:]:
        validate_tree(child, d)


@lru_cache(maxsize=None)
def _trees(d: int, n: int) -> Tuple[PlaneTree, ...]:
    if n == 1:
        return (LEAF,)
    out: List[PlaneTree] = []
    # root arity r, then leaf counts of the ordered subtrees composing n
    for r in range(2, n + 1):
        for parts in _compositions(n, r):
            child_sets = [_trees(d, p) for p in parts]
            for children in _products(child_sets):
                for label in range(1, d + 1):
                    out.append((label, *children))
    return tuple(out)


def _compositions(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Ordered r-tuples of positive integers summing to n."""
    if r == 1:
        yield (n,)
        return
    for first in range(1, n - r + 2):
        for rest in _compositions(n - first, r - 1):
            yield (first, *rest)


def _products(pools: List[Tuple[PlaneTree, ...]]) -> Iterator[Tuple[PlaneTree, ...]]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _products(pools[1:]):
            yield (head, *tail)


def enumerate_trees(d: int, n: int) -> Set[PlaneTree]:
    """All plane rooted trees with n leaves and internal labels in 1..d."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    return set(_trees(d, n))


def tree_counts(d: int, max_n: int) -> TruncatedSeries:
    """Leaf-count series T with coefficient[n] = t_d(n), truncated at max_n.

    T satisfies T = x + d T^2 / (1 - T) (a root is a leaf, or one of d labels
    over at least two ordered subtrees); clearing the denominator gives
    T = x - xT + (d+1) T^2, read off coefficientwise.
    """
    if d < 1 or max_n < 0:
        raise ValueError("need d >= 1 and max_n >= 0")
    t = [0] * (max_n + 1)
    if max_n >= 1:
        t[1] = 1
    for n in range(2, max_n + 1):
        conv = sum(t[j] * t[n - j] for j in range(1, n))
        t[n] = (d + 1) * conv - t[n - 1]
    return TruncatedSeries(tuple(t))


def psi(tree: PlaneTree, d: int) -> Decomposition:
    """Decomposition obtained by splitting along the root label's axis and recursing.

    The root's r children land in the r slabs of the axis split in ascending
    order of the split coordinate.
    """
    validate_tree(tree, d)
    return _psi(tree, d)


def _psi(tree: PlaneTree, d: int) -> Decomposition:
    if is_leaf(tree):
        return trivial_decomposition(d)
    label = tree[0]
    children = tree[1:]
    slabs = split(unit_region(d), label - 1, len(children))
    regions = []
    for child, slab in zip(children, slabs):
        for region in _psi(child, d).regions:
            regions.append(scale_map(unit_region(d), slab, region))
    return Decomposition(d, tuple(regions))


def format_tree(tree: PlaneTree) -> str:
    """Parenthesised text form: leaf is "L", internal is "(label child ...)"."""
    if is_leaf(tree):
        return "L"
    return "(" + " ".join([str(tree[0])] + [format_tree(c) for c in tree[1:]]) + ")"


def parse_tree(text: str) -> PlaneTree:
    """Inverse of format_tree; raises ValueError on malformed input."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    tree, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing tokens after tree: {' '.join(tokens[pos:])}")
    return tree


def _parse(tokens: List[str], pos: int) -> Tuple[PlaneTree, int]:
    if pos >= len(tokens):
        raise ValueError("unexpected end of input")
    tok = tokens[pos]
    if tok == "L":
        return LEAF, pos + 1
    if tok != "(":
        raise ValueError(f"expected 'L' or '(', got {tok!r}")
    pos += 1
    if pos >= len(tokens) or not tokens[pos].isdigit():
        raise ValueError("expected integer label after '('")
    label = int(tokens[pos])
    pos += 1
    children: List[PlaneTree] = []
    while pos < len(tokens) and tokens[pos] != ")":
        child, pos = _parse(tokens, pos)
        children.append(child)
    if pos >= len(tokens):
        raise ValueError("missing ')'")
    if len(children) < 2:
        raise ValueError("internal node must have at least 2 children")
    return (label, *children), pos + 1


def tree_to_json(tree: PlaneTree) -> Union[str, list]:
    """JSON form: "L" for a leaf, [label, child, ...] for an internal node."""
    if is_leaf(tree):
        return "L"
    return [tree[0]] + [tree_to_json(c) for c in tree[1:]]


def tree_from_json(obj: Union[str, list]) -> PlaneTree:
    if obj == "L":
        return LEAF
    if not isinstance(obj, list) or len(obj) < 3 or not isinstance(obj[0], int):
        raise ValueError(f"malformed tree JSON: {obj!r}")
    return (obj[0], *(tree_from_json(c) for c in obj[1:]))
