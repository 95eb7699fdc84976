#!/usr/bin/python3
"""Test the exhaustive cross-checks"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import unittest

from degseq.verify import Counterexample, Report, nonincreasing_sequences, sweep_bipartite, sweep_trees


class TestVerify(unittest.TestCase):
    """Small sweeps find no counterexample"""

    def test_sequences(self) -> None:
        """Nonincreasing tuples are listed once each"""
        self.assertEqual(list(nonincreasing_sequences(2, 2, 1)), [(2, 2), (2, 1), (1, 1)])
        self.assertEqual(len(list(nonincreasing_sequences(3, 3))), 20)

    def test_trees(self) -> None:
        """Trees with up to 9 vertices, the default sweep"""
        report = sweep_trees()
        self.assertTrue(report.passed, report.counterexample)
        self.assertEqual(report.instances, 1 + 2 + 3 + 5 + 7 + 11 + 15)
        self.assertGreater(report.checks, report.instances)

    def test_bipartite(self) -> None:
        """Bipartite sequences with n, m <= 3 and degrees <= 2"""
        report = sweep_bipartite(3, 3, 2)
        self.assertTrue(report.passed, report.counterexample)
        self.assertEqual(report.instances, (3 + 6 + 10) ** 2)

    def test_report(self) -> None:
        """A report fails when it carries a counterexample"""
        counterexample = Counterexample("tree interval", "2,1,1", "[1]", "(1, 2)")
        self.assertEqual(str(counterexample), "tree interval failed for 2,1,1: expected [1], got (1, 2)")
        self.assertFalse(Report(1, 1, counterexample).passed)
        self.assertTrue(Report(1, 1, None).passed)


if __name__ == "__main__":
    unittest.main()
