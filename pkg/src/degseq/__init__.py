#!/usr/bin/python3
"""A library for matching numbers of degree sequence realizations"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import enum
import functools
from collections import deque
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from collections.abc import Iterable

__all__ = [
    "BadParams",
    "BipartiteDegreeSequence",
    "DegSeqError",
    "DegreeSequence",
    "HypothesisViolation",
    "InconsistencyWarning",
    "InconsistentMatching",
    "InternalInconsistency",
    "InvalidSequence",
    "InvalidSwap",
    "LabeledBipartiteGraph",
    "LabeledTree",
    "Matching",
    "MismatchedSequences",
    "NegativeCapacity",
    "OracleCapExceeded",
    "OutOfRange",
    "Side",
    "Vertex",
    "VertexCover",
    "canonical_realization",
    "maximum_matching",
    "minimum_vertex_cover",
    "tree_matching_number",
    "tree_maximum_matching",
]


class DegSeqError(ValueError):
    """Base class of all errors raised by degseq"""


class InvalidSequence(DegSeqError):
    """A sequence is malformed or is not realizable in the requested class"""


class HypothesisViolation(InvalidSequence):
    """A cover set does not satisfy the hypotheses of the cover construction"""

    def __init__(self, condition: str, message: str) -> None:
        """Construct a HypothesisViolation for condition ``i``, ``ii`` or ``iii``"""
        super().__init__(f"({condition}) violated: {message}")
        self.condition = condition


class OutOfRange(DegSeqError):
    """A requested matching number lies outside the achievable interval"""


class NegativeCapacity(DegSeqError):
    """Network parameters would give an arc a negative capacity"""


class BadParams(DegSeqError):
    """Parameters violate an operation's preconditions"""


class InternalInconsistency(DegSeqError):
    """Two computations of the same quantity disagree"""


class InconsistentMatching(InternalInconsistency):
    """A matching is invalid or not maximum for its host graph"""


class InconsistencyWarning(UserWarning):
    """Two computations of the same quantity disagree, and one answer was kept"""


class InvalidSwap(DegSeqError):
    """The edge/non-edge pattern of a bipartite swap is not present"""


class MismatchedSequences(DegSeqError):
    """Two graphs do not realize the same bipartite degree sequence"""


class OracleCapExceeded(DegSeqError):
    """An exhaustive enumeration would exceed the configured size cap"""


class _DegreeSequence(NamedTuple):
    values: tuple[int, ...]
    """Degrees in nonincreasing order; ``values[i - 1]`` is the degree of vertex i"""


class DegreeSequence(_DegreeSequence):
    """A nonincreasing sequence of nonnegative integer degrees"""

    def __new__(cls, values: Iterable[int]) -> DegreeSequence:  # noqa: PYI034
        """Construct a DegreeSequence, checking it is nonnegative and nonincreasing"""
        v = tuple(int(x) for x in values)
        if any(x < 0 for x in v):
            raise InvalidSequence(f"negative degree in {v}")
        if any(x < y for x, y in zip(v, v[1:])):
            raise InvalidSequence(f"degrees {v} are not nonincreasing")
        return _DegreeSequence.__new__(cls, v)

    @classmethod
    def from_unsorted(cls, values: Iterable[int]) -> tuple[DegreeSequence, tuple[int, ...]]:
        """Sort values nonincreasingly.

        Also returns the permutation applied: entry ``r`` is the 1-based input
        position of the value that ends up at position ``r + 1``.
        """
        v = [int(x) for x in values]
        order = sorted(range(len(v)), key=lambda i: -v[i])
        return cls(v[i] for i in order), tuple(i + 1 for i in order)

    @classmethod
    def parse(cls, text: str) -> tuple[DegreeSequence, tuple[int, ...]]:
        """Parse a comma or whitespace separated list of degrees, sorting it"""
        parts = text.replace(",", " ").split()
        try:
            values = [int(p) for p in parts]
        except ValueError as e:
            raise InvalidSequence(f"Could not parse degree sequence {text!r}") from e
        if any(x < 0 for x in values):
            raise InvalidSequence(f"negative degree in {text!r}")
        return cls.from_unsorted(values)

    @property
    def n(self) -> int:
        """Number of entries"""
        return len(self.values)

    @property
    def total(self) -> int:
        """Sum of the entries"""
        return sum(self.values)

    def n_of(self, degree: int) -> int:
        """Number of entries equal to ``degree``"""
        return self.values.count(degree)

    def degree(self, i: int) -> int:
        """Degree of vertex i (1-based)"""
        return self.values[i - 1]

    def __str__(self) -> str:
        """Implement str()"""
        return ",".join(str(x) for x in self.values)


class BipartiteDegreeSequence(NamedTuple):
    """The pair (d_A, d_B); feasibility is a separate check"""

    d_a: DegreeSequence
    """Degrees of v_1 .. v_n"""

    d_b: DegreeSequence
    """Degrees of w_1 .. w_m"""

    @classmethod
    def of(cls, d_a: Iterable[int], d_b: Iterable[int]) -> BipartiteDegreeSequence:
        """Build from two nonincreasing iterables"""
        return cls(DegreeSequence(d_a), DegreeSequence(d_b))

    @property
    def n(self) -> int:
        """Size of the A side"""
        return self.d_a.n

    @property
    def m(self) -> int:
        """Size of the B side"""
        return self.d_b.n

    @property
    def sums_equal(self) -> bool:
        """True if both sides have the same degree sum"""
        return self.d_a.total == self.d_b.total

    def __str__(self) -> str:
        """Implement str()"""
        return f"({self.d_a}|{self.d_b})"


class Side(enum.Enum):
    """Partite set of a vertex, valued by the letter used in vertex names"""

    A = "v"
    B = "w"


class Vertex(NamedTuple):
    """A vertex v_i (side A) or w_j (side B)"""

    side: Side
    index: int

    def __str__(self) -> str:
        """Implement str()"""
        return f"{self.side.value}{self.index}"


class _LabeledBipartiteGraph(NamedTuple):
    n: int
    """Number of A-vertices v_1 .. v_n"""

    m: int
    """Number of B-vertices w_1 .. w_m"""

    edges: frozenset[tuple[int, int]]
    """Pairs (i, j), each meaning the edge v_i w_j"""


class LabeledBipartiteGraph(_LabeledBipartiteGraph):
    """A simple bipartite graph on labeled partite sets"""

    def __new__(cls, n: int, m: int, edges: Iterable[tuple[int, int]]) -> LabeledBipartiteGraph:  # noqa: PYI034
        """Construct a LabeledBipartiteGraph, rejecting duplicate or out-of-range edges"""
        if n < 0 or m < 0:
            raise BadParams(f"negative vertex count n={n} m={m}")
        edge_list = [(int(i), int(j)) for i, j in edges]
        edge_set = frozenset(edge_list)
        if len(edge_set) != len(edge_list):
            raise BadParams("duplicate edge")
        for i, j in edge_set:
            if not (1 <= i <= n and 1 <= j <= m):
                raise BadParams(f"edge v{i} w{j} out of range for n={n} m={m}")
        return _LabeledBipartiteGraph.__new__(cls, n, m, edge_set)

    @functools.cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        """Sorted neighbor tuples for each vertex, A side then B side (index 0 unused)"""
        adj_a: list[list[int]] = [[] for _ in range(self.n + 1)]
        adj_b: list[list[int]] = [[] for _ in range(self.m + 1)]
        for i, j in sorted(self.edges):
            adj_a[i].append(j)
            adj_b[j].append(i)
        adj_b = [sorted(x) for x in adj_b]
        return tuple(tuple(x) for x in adj_a), tuple(tuple(x) for x in adj_b)

    def neighbors_a(self, i: int) -> tuple[int, ...]:
        """Indices j of the neighbors w_j of v_i, increasing"""
        return self._adjacency[0][i]

    def neighbors_b(self, j: int) -> tuple[int, ...]:
        """Indices i of the neighbors v_i of w_j, increasing"""
        return self._adjacency[1][j]

    def degree_a(self, i: int) -> int:
        """Degree of v_i"""
        return len(self._adjacency[0][i])

    def degree_b(self, j: int) -> int:
        """Degree of w_j"""
        return len(self._adjacency[1][j])

    def degrees(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Per-vertex degrees of (v_1..v_n) and (w_1..w_m)"""
        return (
            tuple(self.degree_a(i) for i in range(1, self.n + 1)),
            tuple(self.degree_b(j) for j in range(1, self.m + 1)),
        )

    def has_edge(self, i: int, j: int) -> bool:
        """Return True if v_i w_j is an edge"""
        return (i, j) in self.edges

    def realizes(self, dd: BipartiteDegreeSequence) -> bool:
        """Return True if v_i has degree a_i and w_j has degree b_j for every i, j"""
        return (self.n, self.m) == (dd.n, dd.m) and self.degrees() == (dd.d_a.values, dd.d_b.values)

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges ordered by i, then j"""
        return sorted(self.edges)

    def replace_edges(
        self,
        remove: Iterable[tuple[int, int]],
        add: Iterable[tuple[int, int]],
    ) -> LabeledBipartiteGraph:
        """Return a new graph with some edges removed and others added"""
        return LabeledBipartiteGraph(self.n, self.m, (self.edges - frozenset(remove)) | frozenset(add))

    def __str__(self) -> str:
        """Implement str()"""
        return " ".join(f"v{i}w{j}" for i, j in self.sorted_edges())


class _LabeledTree(NamedTuple):
    n: int
    """Number of vertices v_1 .. v_n"""

    edges: frozenset[tuple[int, int]]
    """Pairs (u, v) with u < v"""


class LabeledTree(_LabeledTree):
    """A tree on the labeled vertices v_1 .. v_n"""

    def __new__(cls, n: int, edges: Iterable[tuple[int, int]]) -> LabeledTree:  # noqa: PYI034
        """Construct a LabeledTree, checking that the edges form a spanning tree"""
        edge_list = [(min(int(u), int(v)), max(int(u), int(v))) for u, v in edges]
        edge_set = frozenset(edge_list)
        if n < 1:
            raise BadParams("a tree needs at least one vertex")
        if len(edge_set) != len(edge_list):
            raise BadParams("duplicate edge")
        if len(edge_set) != n - 1:
            raise BadParams(f"a tree on {n} vertices has {n - 1} edges, not {len(edge_set)}")
        for u, v in edge_set:
            if u == v:
                raise BadParams(f"self-loop at v{u}")
            if not (1 <= u and v <= n):
                raise BadParams(f"edge v{u} v{v} out of range for n={n}")
        tree = _LabeledTree.__new__(cls, n, edge_set)
        if len(tree.bfs_order()) != n:
            raise BadParams("edges do not form a connected graph")
        return tree

    @functools.cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples (index 0 unused)"""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(x)) for x in adj)

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Neighbors of v_u, increasing"""
        return self._adjacency[u]

    def degree(self, u: int) -> int:
        """Degree of v_u"""
        return len(self._adjacency[u])

    def degrees(self) -> tuple[int, ...]:
        """Per-vertex degrees of v_1 .. v_n"""
        return tuple(self.degree(u) for u in range(1, self.n + 1))

    def bfs_order(self, root: int = 1) -> list[tuple[int, int]]:
        """(vertex, parent) pairs in breadth-first order from ``root``; the root's parent is 0"""
        order = [(root, 0)]
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in self._adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    order.append((v, u))
                    queue.append(v)
        return order

    def as_bipartite(self) -> tuple[LabeledBipartiteGraph, tuple[int, ...], tuple[int, ...]]:
        """Return the tree as a bipartite graph under its 2-coloring rooted at v_1.

        The second and third results list the tree labels of the A and B
        vertices; A-vertex i of the graph is tree vertex ``a_labels[i - 1]``.
        """
        depth = {1: 0}
        for u, parent in self.bfs_order():
            if parent:
                depth[u] = depth[parent] + 1
        a_labels = tuple(u for u in range(1, self.n + 1) if depth[u] % 2 == 0)
        b_labels = tuple(u for u in range(1, self.n + 1) if depth[u] % 2 == 1)
        a_index = {u: i for i, u in enumerate(a_labels, 1)}
        b_index = {u: j for j, u in enumerate(b_labels, 1)}
        edges = [(a_index[u], b_index[v]) if u in a_index else (a_index[v], b_index[u]) for u, v in self.edges]
        return LabeledBipartiteGraph(len(a_labels), len(b_labels), edges), a_labels, b_labels

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges ordered lexicographically"""
        return sorted(self.edges)

    def __str__(self) -> str:
        """Implement str()"""
        return " ".join(f"v{u}v{v}" for u, v in self.sorted_edges())


class Matching(NamedTuple):
    """A set of pairwise vertex-disjoint edges of a host graph"""

    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        """Number of edges"""
        return len(self.edges)

    def is_matching_in(self, g: LabeledBipartiteGraph) -> bool:
        """Return True if the edges are disjoint edges of the bipartite graph g"""
        left = {i for i, _ in self.edges}
        right = {j for _, j in self.edges}
        return len(left) == len(right) == self.size and self.edges <= g.edges


class VertexCover(NamedTuple):
    """A set of vertices touching every edge of a host graph"""

    vertices: frozenset[Vertex]

    @property
    def size(self) -> int:
        """Number of vertices"""
        return len(self.vertices)

    def covers(self, g: LabeledBipartiteGraph) -> bool:
        """Return True if every edge of g has an endpoint in the cover"""
        return all(Vertex(Side.A, i) in self.vertices or Vertex(Side.B, j) in self.vertices for i, j in g.edges)


def maximum_matching(g: LabeledBipartiteGraph) -> Matching:
    """Find a maximum matching by augmenting paths.

    Free A-vertices are scanned by increasing index and their neighbors by
    increasing index, so the result only depends on the graph.
    """
    mate_b: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in g.neighbors_a(i):
            if j in seen:
                continue
            seen.add(j)
            if j not in mate_b or augment(mate_b[j], seen):
                mate_b[j] = i
                return True
        return False

    for i in range(1, g.n + 1):
        augment(i, set())
    return Matching(frozenset((i, j) for j, i in mate_b.items()))


def minimum_vertex_cover(g: LabeledBipartiteGraph, max_matching: Matching) -> VertexCover:
    """Extract a minimum vertex cover from a maximum matching (Kőnig-Egerváry)

    Z is the set of vertices reachable from free A-vertices by alternating
    paths; the cover is (A - Z) + (B & Z).
    """
    if not max_matching.is_matching_in(g):
        raise InconsistentMatching("the edges are not a matching of the graph")
    mate_a = dict(max_matching.edges)
    mate_b = {j: i for i, j in max_matching.edges}
    reached_a = {i for i in range(1, g.n + 1) if i not in mate_a}
    reached_b: set[int] = set()
    queue = deque(sorted(reached_a))
    while queue:
        i = queue.popleft()
        for j in g.neighbors_a(i):
            if j == mate_a.get(i) or j in reached_b:
                continue
            reached_b.add(j)
            partner = mate_b.get(j)
            if partner is not None and partner not in reached_a:
                reached_a.add(partner)
                queue.append(partner)
    cover = frozenset(
        [Vertex(Side.A, i) for i in range(1, g.n + 1) if i not in reached_a]
        + [Vertex(Side.B, j) for j in reached_b],
    )
    if len(cover) != max_matching.size:
        raise InconsistentMatching(
            f"cover extraction gave {len(cover)} vertices for a matching of size {max_matching.size};"
            " the matching is not maximum",
        )
    return VertexCover(cover)


def tree_maximum_matching(t: LabeledTree) -> Matching:
    """Greedy leaf matching: match each vertex to its parent when both are free, leaves first"""
    matched: set[int] = set()
    edges = set()
    for u, parent in reversed(t.bfs_order()):
        if parent and u not in matched and parent not in matched:
            matched.update((u, parent))
            edges.add((min(u, parent), max(u, parent)))
    return Matching(frozenset(edges))


def tree_matching_number(t: LabeledTree) -> int:
    """Return the matching number of a tree"""
    return tree_maximum_matching(t).size


def canonical_realization(dd: BipartiteDegreeSequence) -> LabeledBipartiteGraph:
    """Build the greedy realization of a bipartite degree sequence

    Rows are processed by increasing index; v_i is joined to the a_i
    B-vertices of largest residual degree, smaller index first on ties.
    """
    residual = list(dd.d_b.values)
    edges = []
    for i, a in enumerate(dd.d_a.values, 1):
        chosen = sorted(range(dd.m), key=lambda j: (-residual[j], j))[:a]
        if len(chosen) < a or any(residual[j] == 0 for j in chosen):
            raise InvalidSequence(f"{dd} is not a bipartite degree sequence")
        for j in chosen:
            residual[j] -= 1
            edges.append((i, j + 1))
    if any(residual):
        raise InvalidSequence(f"{dd} is not a bipartite degree sequence")
    return LabeledBipartiteGraph(dd.n, dd.m, edges)
