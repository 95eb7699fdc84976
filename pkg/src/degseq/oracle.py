# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only
"""Exhaustive enumeration of the realizations of small degree sequences

Trees are listed through their Prüfer strings, in which v_i appears
d_i - 1 times.  Bipartite graphs are listed row by row as 0/1 matrices with
the prescribed row and column sums.  Both enumerations refuse to start when
the number of realizations exceeds :func:`degseq.settings.oracle_cap`.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from typing import TYPE_CHECKING

import networkx

from . import (
    BipartiteDegreeSequence,
    DegreeSequence,
    LabeledBipartiteGraph,
    LabeledTree,
    OracleCapExceeded,
    maximum_matching,
)
from .settings import oracle_cap

if TYPE_CHECKING:
    from collections.abc import Iterator

__all__ = [
    "achievable_nu_set_bipartite",
    "achievable_nu_set_tree",
    "count_bipartite",
    "count_trees",
    "enumerate_bipartite",
    "enumerate_trees",
]


def _is_tree_shaped(d: DegreeSequence) -> bool:
    return d.n >= 2 and all(x >= 1 for x in d.values) and d.total == 2 * (d.n - 1)


def count_trees(d: DegreeSequence) -> int:
    """Number of labeled trees with d_T(v_i) = d_i"""
    if not _is_tree_shaped(d):
        return 0
    result = math.factorial(d.n - 2)
    for x in d.values:
        result //= math.factorial(x - 1)
    return result


def _next_permutation(seq: list[int]) -> bool:
    """Advance seq to the next permutation in lexicographic order; False after the last one"""
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1 :] = reversed(seq[i + 1 :])
    return True


def _check_cap(count: int, what: str) -> None:
    cap = oracle_cap()
    if count > cap:
        raise OracleCapExceeded(f"{what} has {count} realizations, more than the cap of {cap}")


def _prufer_strings(d: DegreeSequence) -> Iterator[list[int]]:
    """Every Prüfer string (0-based labels) of a tree with degrees d; the list is reused between yields"""
    prufer = sorted(i for i, x in enumerate(d.values) for _ in range(x - 1))
    while True:
        yield prufer
        if not _next_permutation(prufer):
            return


def _trees(d: DegreeSequence) -> Iterator[LabeledTree]:
    if d.n == 2:
        yield LabeledTree(2, [(1, 2)])
        return
    for prufer in _prufer_strings(d):
        g = networkx.from_prufer_sequence(prufer)
        yield LabeledTree(d.n, ((u + 1, v + 1) for u, v in g.edges()))


def _prufer_matching_number(prufer: list[int], n: int) -> int:
    """Matching number of the tree encoded by prufer, without building it

    Decoding removes a leaf of the remaining tree at every step, so matching
    each removed leaf to its neighbor when both are free is maximum.
    """
    degree = [1] * n
    for x in prufer:
        degree[x] += 1
    matched = [False] * n
    size = 0
    ptr = degree.index(1)
    leaf = ptr
    for x in prufer:
        if not (matched[leaf] or matched[x]):
            matched[leaf] = matched[x] = True
            size += 1
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    if not (matched[leaf] or matched[n - 1]):
        size += 1
    return size


def enumerate_trees(d: DegreeSequence) -> Iterator[LabeledTree]:
    """Yield every labeled tree with d_T(v_i) = d_i once, in lexicographic Prüfer order"""
    if not _is_tree_shaped(d):
        return iter(())
    _check_cap(count_trees(d), f"tree sequence {d}")
    return _trees(d)


def _compositions(total: int, caps: list[int]) -> Iterator[tuple[int, ...]]:
    """Tuples c with 0 <= c[g] <= caps[g] and sum(c) == total"""
    if not caps:
        if total == 0:
            yield ()
        return
    for c in range(min(total, caps[0]) + 1):
        for rest in _compositions(total - c, caps[1:]):
            yield (c, *rest)


def count_bipartite(dd: BipartiteDegreeSequence) -> int:
    """Number of realizations of dd, counted column by column

    Rows are interchangeable apart from their remaining degree, so the state
    is the multiset of remaining row degrees.
    """
    if not dd.sums_equal:
        return 0
    columns = dd.d_b.values

    @functools.lru_cache(maxsize=None)
    def count(j: int, rows: tuple[int, ...]) -> int:
        if j == len(columns):
            return int(not rows)
        groups = sorted(Counter(rows).items(), reverse=True)
        total = 0
        for picks in _compositions(columns[j], [size for _, size in groups]):
            ways = 1
            remaining: list[int] = []
            for (degree, size), c in zip(groups, picks):
                ways *= math.comb(size, c)
                remaining += [degree - 1] * c + [degree] * (size - c)
            total += ways * count(j + 1, tuple(sorted((r for r in remaining if r), reverse=True)))
        return total

    return count(0, tuple(x for x in dd.d_a.values if x))


def _bipartite(dd: BipartiteDegreeSequence) -> Iterator[LabeledBipartiteGraph]:
    n, m = dd.n, dd.m
    residual = list(dd.d_b.values)
    rows: list[tuple[int, ...]] = []

    def extend(i: int) -> Iterator[LabeledBipartiteGraph]:
        if i > n:
            if not any(residual):
                yield LabeledBipartiteGraph(n, m, ((r, j) for r, row in enumerate(rows, 1) for j in row))
            return
        for row in itertools.combinations(range(1, m + 1), dd.d_a.degree(i)):
            if any(residual[j - 1] == 0 for j in row):
                continue
            for j in row:
                residual[j - 1] -= 1
            if max(residual, default=0) <= n - i:
                rows.append(row)
                yield from extend(i + 1)
                rows.pop()
            for j in row:
                residual[j - 1] += 1

    yield from extend(1)


def enumerate_bipartite(dd: BipartiteDegreeSequence) -> Iterator[LabeledBipartiteGraph]:
    """Yield every realization of dd once, rows in index order, each row's neighbors lexicographic"""
    if not dd.sums_equal:
        return iter(())
    _check_cap(count_bipartite(dd), f"bipartite sequence {dd}")
    return _bipartite(dd)


def achievable_nu_set_tree(d: DegreeSequence) -> set[int]:
    """Matching numbers of all trees with d_T(v_i) = d_i"""
    if not _is_tree_shaped(d):
        return set()
    _check_cap(count_trees(d), f"tree sequence {d}")
    return {_prufer_matching_number(prufer, d.n) for prufer in _prufer_strings(d)}


def achievable_nu_set_bipartite(dd: BipartiteDegreeSequence) -> set[int]:
    """Matching numbers of all realizations of dd"""
    return {maximum_matching(g).size for g in enumerate_bipartite(dd)}
