# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only
"""Matching numbers of trees with a prescribed degree sequence

A nonincreasing sequence d of n >= 3 positive integers is a tree degree
sequence iff n_1(d) = 2 + sum(d_i - 2 for d_i >= 2).  The matching numbers
of its realizations are exactly the integers in
``[min{k : d_1 + ... + d_k >= n - 1}, min{floor(n/2), n - n_1(d)}]``.
"""

from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING, NamedTuple

from . import BadParams, DegreeSequence, HypothesisViolation, InvalidSequence, LabeledTree, OutOfRange

if TYPE_CHECKING:
    from collections.abc import Iterable

__all__ = [
    "TreeIntervalResult",
    "is_tree_degree_sequence",
    "matching_interval_tree",
    "nu_max_tree",
    "nu_min_tree",
    "realize_tree_nu_max",
    "realize_tree_with_cover",
    "realize_tree_with_nu",
]

Edge = tuple[int, int]


class TreeIntervalResult(NamedTuple):
    """The achievable matching numbers of a tree degree sequence"""

    nu_min: int
    nu_max: int

    def values(self) -> range:
        """Every achievable matching number"""
        return range(self.nu_min, self.nu_max + 1)


def is_tree_degree_sequence(d: DegreeSequence) -> bool:
    """Return True if some tree has degree sequence d"""
    if d.n < 2 or any(x < 1 for x in d.values):
        return False
    return d.n_of(1) == 2 + sum(x - 2 for x in d.values if x >= 2)


def _require_tree_sequence(d: DegreeSequence) -> None:
    if not is_tree_degree_sequence(d):
        raise InvalidSequence(f"{d} is not a tree degree sequence")
    if d.n < 3:
        raise InvalidSequence(f"{d} has fewer than 3 entries")


def nu_max_tree(d: DegreeSequence) -> int:
    """Largest matching number of a tree with degree sequence d"""
    _require_tree_sequence(d)
    return min(d.n // 2, d.n - d.n_of(1))


def nu_min_tree(d: DegreeSequence) -> int:
    """Smallest matching number of a tree with degree sequence d"""
    _require_tree_sequence(d)
    prefix = 0
    for k, x in enumerate(d.values, 1):
        prefix += x
        if prefix >= d.n - 1:
            return k
    raise AssertionError("unreachable: the degrees of a tree sum to 2(n-1)")


def matching_interval_tree(d: DegreeSequence) -> TreeIntervalResult:
    """Return [nu_min, nu_max] for the tree degree sequence d"""
    return TreeIntervalResult(nu_min_tree(d), nu_max_tree(d))


class _GrowingTree:
    """A tree under construction together with a maximum matching of it"""

    def __init__(self) -> None:
        """Construct an empty tree"""
        self.adj: dict[int, set[int]] = {}
        self.mate: dict[int, int] = {}

    def add_edge(self, u: int, v: int) -> None:
        """Add the edge uv"""
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    def match(self, u: int, v: int) -> None:
        """Put the edge uv into the matching"""
        self.mate[u] = v
        self.mate[v] = u

    def subdivide(self, u: int, w: int, x: int) -> None:
        """Replace the edge uw by the path u x w"""
        self.adj[u].discard(w)
        self.adj[w].discard(u)
        self.add_edge(u, x)
        self.add_edge(x, w)
        if self.mate.get(u) == w:
            del self.mate[w]
            self.match(u, x)

    def insert_degree_two(self, x: int) -> None:
        """Subdivide an edge with the new vertex x, growing the matching when possible"""
        exposed = [u for u in sorted(self.adj) if u not in self.mate]
        if exposed:
            u = exposed[0]
            w = min(self.adj[u])
            self.subdivide(u, w, x)
            self.match(u, x)
        else:
            u, w = min(self.edges())
            self.subdivide(u, w, x)

    def edges(self) -> list[Edge]:
        """Edges (u, w) with u < w"""
        return sorted((u, w) for u, nbrs in self.adj.items() for w in nbrs if u < w)


def _max_matching_tree(degrees: Iterable[tuple[int, int]]) -> list[Edge]:
    """Build a tree with the given (label, degree) pairs and the largest possible matching number

    Without degree-2 vertices this is a caterpillar: the other non-leaves
    form a path in label order and every one of them keeps a private leaf.
    Each degree-2 vertex then subdivides an edge at an unmatched vertex.
    """
    pairs = sorted(degrees)
    spine = [u for u, deg in pairs if deg > 2]
    twos = [u for u, deg in pairs if deg == 2]
    leaves = deque(u for u, deg in pairs if deg == 1)
    degree = dict(pairs)
    tree = _GrowingTree()
    if not spine:
        u, w = leaves
        tree.add_edge(u, w)
        tree.match(u, w)
    for u, w in zip(spine, spine[1:]):
        tree.add_edge(u, w)
    for position, u in enumerate(spine):
        on_path = (position > 0) + (position < len(spine) - 1)
        for r in range(degree[u] - on_path):
            leaf = leaves.popleft()
            tree.add_edge(u, leaf)
            if r == 0:
                tree.match(u, leaf)
    for x in twos:
        tree.insert_degree_two(x)
    return tree.edges()


def realize_tree_nu_max(d: DegreeSequence) -> LabeledTree:
    """Return a tree with d_T(v_i) = d_i and the largest matching number allowed by d"""
    _require_tree_sequence(d)
    return LabeledTree(d.n, _max_matching_tree(enumerate(d.values, 1)))


def _cover_tree(degree: dict[int, int], cover: frozenset[int]) -> list[Edge]:
    """Recursive cover construction; labels and degrees are carried explicitly"""
    if all(degree[u] == 1 for u in degree if u not in cover):
        return _max_matching_tree(degree.items())
    p = max((u for u in degree if u not in cover and degree[u] > 1), key=lambda u: (degree[u], u))
    q = max(cover, key=lambda u: (-degree[u], u))
    ones = sorted(u for u in degree if degree[u] == 1)
    star = ones[len(ones) - (degree[q] - 1) :]
    reduced = {u: deg for u, deg in degree.items() if u != q and u not in star}
    reduced[p] -= 1
    edges = _cover_tree(reduced, cover - {q})
    edges.append((min(p, q), max(p, q)))
    edges.extend((min(q, leaf), max(q, leaf)) for leaf in star)
    return edges


def realize_tree_with_cover(d: DegreeSequence, cover_indices: Iterable[int]) -> LabeledTree:
    """Return a tree with d_T(v_i) = d_i in which {v_i : i in cover_indices} is a minimum vertex cover

    The cover X must satisfy (i) d_i > 1 on X, (ii) |X| <= n/2 and
    (iii) the degree sum on X is at least the degree sum off X.
    """
    _require_tree_sequence(d)
    cover = frozenset(int(i) for i in cover_indices)
    for i in sorted(cover):
        if not 1 <= i <= d.n:
            raise BadParams(f"cover vertex v{i} out of range for n={d.n}")
        if d.degree(i) <= 1:
            raise HypothesisViolation("i", f"d_{i} = {d.degree(i)} for v{i} in the cover")
    if 2 * len(cover) > d.n:
        raise HypothesisViolation("ii", f"|X| = {len(cover)} exceeds n/2 = {d.n / 2}")
    inside = sum(d.degree(i) for i in cover)
    outside = d.total - inside
    if inside < outside:
        raise HypothesisViolation("iii", f"degree sum {inside} on X is less than {outside} off X")
    return LabeledTree(d.n, _cover_tree(dict(enumerate(d.values, 1)), cover))


def realize_tree_with_nu(d: DegreeSequence, nu: int) -> LabeledTree:
    """Return a tree with d_T(v_i) = d_i and matching number nu"""
    interval = matching_interval_tree(d)
    if not interval.nu_min <= nu <= interval.nu_max:
        raise OutOfRange(f"nu={nu} is outside [{interval.nu_min}, {interval.nu_max}] for {d}")
    return realize_tree_with_cover(d, range(1, nu + 1))
