#!/usr/bin/python3
"""Test the exhaustive realization oracle"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import os
import unittest
from unittest import mock

import degseq
from degseq import BipartiteDegreeSequence, DegreeSequence
from degseq.cuts import gale_ryser_check
from degseq.oracle import (
    achievable_nu_set_bipartite,
    achievable_nu_set_tree,
    count_bipartite,
    count_trees,
    enumerate_bipartite,
    enumerate_trees,
)
from degseq.verify import nonincreasing_sequences


def bip(d_a: tuple[int, ...], d_b: tuple[int, ...]) -> BipartiteDegreeSequence:
    """Shorthand for a BipartiteDegreeSequence"""
    return BipartiteDegreeSequence.of(d_a, d_b)


class TestTrees(unittest.TestCase):
    """Labeled trees with given per-vertex degrees"""

    def test_counts(self) -> None:
        """Multinomial counts of Prüfer strings"""
        self.assertEqual(count_trees(DegreeSequence([2, 1, 1])), 1)
        self.assertEqual(count_trees(DegreeSequence([2, 2, 1, 1])), 2)
        self.assertEqual(count_trees(DegreeSequence([3, 1, 1, 1, 1])), 0)
        self.assertEqual(count_trees(DegreeSequence([1, 1])), 1)
        self.assertEqual(count_trees(DegreeSequence([2, 1, 1, 0])), 0)
        self.assertEqual(count_trees(DegreeSequence([3, 3, 2, 1, 1, 1, 1])), 30)

    def test_enumeration(self) -> None:
        """Each tree has the right degrees and appears once"""
        for n in range(2, 8):
            for values in nonincreasing_sequences(n, n - 1, 1):
                d = DegreeSequence(values)
                trees = list(enumerate_trees(d))
                with self.subTest(d=str(d)):
                    self.assertEqual(len(trees), count_trees(d))
                    self.assertEqual(len({t.edges for t in trees}), len(trees))
                    self.assertTrue(all(t.degrees() == values for t in trees))
                    self.assertEqual(
                        achievable_nu_set_tree(d),
                        {degseq.tree_matching_number(t) for t in trees},
                    )

    def test_examples(self) -> None:
        """The two paths with degrees 2,2,1,1"""
        trees = [t.sorted_edges() for t in enumerate_trees(DegreeSequence([2, 2, 1, 1]))]
        self.assertEqual(sorted(trees), [[(1, 2), (1, 3), (2, 4)], [(1, 2), (1, 4), (2, 3)]])
        self.assertEqual(list(enumerate_trees(DegreeSequence([3, 1, 1, 1, 1]))), [])

    def test_achievable(self) -> None:
        """Matching numbers of all trees"""
        self.assertEqual(achievable_nu_set_tree(DegreeSequence([2, 2, 1, 1])), {2})
        self.assertEqual(achievable_nu_set_tree(DegreeSequence([3, 3, 2, 1, 1, 1, 1])), {2, 3})
        self.assertEqual(achievable_nu_set_tree(DegreeSequence([4, 1, 1, 1, 1])), {1})
        self.assertEqual(achievable_nu_set_tree(DegreeSequence([3, 1, 1, 1, 1])), set())


class TestBipartite(unittest.TestCase):
    """Realizations of bipartite degree sequences"""

    def test_counts(self) -> None:
        """Small sequences with known counts"""
        self.assertEqual(count_bipartite(bip((1, 1), (1, 1))), 2)
        self.assertEqual(count_bipartite(bip((2, 1), (2, 1))), 1)
        self.assertEqual(count_bipartite(bip((2, 2), (2, 2))), 1)
        self.assertEqual(count_bipartite(bip((1, 1, 1), (1, 1, 1))), 6)
        self.assertEqual(count_bipartite(bip((3, 1), (2, 2))), 0)
        self.assertEqual(count_bipartite(bip((2,), (1,))), 0)
        self.assertEqual(count_bipartite(bip((0, 0), (0,))), 1)

    def test_enumeration(self) -> None:
        """Enumeration agrees with the count and with Gale-Ryser, in lexicographic row order"""
        for n in range(1, 4):
            for m in range(1, 4):
                for d_a in nonincreasing_sequences(n, m):
                    for d_b in nonincreasing_sequences(m, n):
                        dd = bip(d_a, d_b)
                        graphs = list(enumerate_bipartite(dd))
                        with self.subTest(dd=str(dd)):
                            self.assertEqual(len(graphs), count_bipartite(dd))
                            self.assertEqual(bool(graphs), gale_ryser_check(dd))
                            self.assertTrue(all(g.realizes(dd) for g in graphs))
                            self.assertEqual(len({g.edges for g in graphs}), len(graphs))
                            rows = [tuple(g.neighbors_a(i) for i in range(1, n + 1)) for g in graphs]
                            self.assertEqual(rows, sorted(rows))

    def test_achievable(self) -> None:
        """Matching numbers of all realizations"""
        self.assertEqual(achievable_nu_set_bipartite(bip((2, 1, 1), (2, 1, 1))), {2, 3})
        self.assertEqual(achievable_nu_set_bipartite(bip((2, 2), (2, 2))), {2})
        self.assertEqual(achievable_nu_set_bipartite(bip((3, 1), (2, 2))), set())


class TestCap(unittest.TestCase):
    """The enumeration limit"""

    def test_cap(self) -> None:
        """Enumeration is refused when the count exceeds the cap"""
        with mock.patch.dict(os.environ, {"DEGSEQ_ORACLE_CAP": "1"}):
            with self.assertRaises(degseq.OracleCapExceeded):
                enumerate_trees(DegreeSequence([2, 2, 1, 1]))
            with self.assertRaises(degseq.OracleCapExceeded):
                enumerate_bipartite(bip((1, 1), (1, 1)))
            self.assertEqual(len(list(enumerate_trees(DegreeSequence([2, 1, 1])))), 1)


if __name__ == "__main__":
    unittest.main()
