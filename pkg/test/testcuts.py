#!/usr/bin/python3
"""Test the Gale-Ryser check, clean cuts and bipartite matching-number intervals"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import random
import unittest
import warnings
from unittest import mock

import degseq
from degseq import BipartiteDegreeSequence, LabeledBipartiteGraph
from degseq.cuts import (
    BipartiteIntervalResult,
    CleanCutSpec,
    certificate,
    check_inequalities,
    clean_cut_capacity,
    clean_cut_members,
    gale_ryser_check,
    gale_ryser_violation,
    matching_interval_bipartite,
    minimum_clean_cut,
)
from degseq.flow import CapacityRule, Realization, build_network, find_realization, max_flow


def bip(d_a: tuple[int, ...], d_b: tuple[int, ...]) -> BipartiteDegreeSequence:
    """Shorthand for a BipartiteDegreeSequence"""
    return BipartiteDegreeSequence.of(d_a, d_b)


def random_sequence(rng: random.Random, max_n: int, max_m: int, density: float | None = None) -> BipartiteDegreeSequence:
    """The sorted degrees of a random bipartite graph"""
    n, m = rng.randint(1, max_n), rng.randint(1, max_m)
    p = rng.random() if density is None else density
    edges = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1) if rng.random() < p]
    d_a, d_b = LabeledBipartiteGraph(n, m, edges).degrees()
    return bip(tuple(sorted(d_a, reverse=True)), tuple(sorted(d_b, reverse=True)))


def bounded_sequence(rng: random.Random, max_n: int, max_m: int, max_deg: int) -> BipartiteDegreeSequence:
    """The sorted degrees of a random bipartite graph with no degree above max_deg"""
    n, m = rng.randint(1, max_n), rng.randint(1, max_m)
    p = rng.random()
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)]
    rng.shuffle(pairs)
    d_a, d_b = [0] * (n + 1), [0] * (m + 1)
    for i, j in pairs:
        if d_a[i] < max_deg and d_b[j] < max_deg and rng.random() < p:
            d_a[i] += 1
            d_b[j] += 1
    return bip(tuple(sorted(d_a[1:], reverse=True)), tuple(sorted(d_b[1:], reverse=True)))


class TestGaleRyser(unittest.TestCase):
    """The prefix-sum inequalities"""

    def test_examples(self) -> None:
        """Worked examples"""
        self.assertTrue(gale_ryser_check(bip((1, 1), (1, 1))))
        self.assertFalse(gale_ryser_check(bip((3, 1), (2, 2))))
        self.assertEqual(gale_ryser_violation(bip((3, 1), (2, 2))), 1)
        self.assertTrue(gale_ryser_check(bip((2, 2, 1), (3, 2))))
        self.assertIsNone(gale_ryser_violation(bip((2, 2, 1), (3, 2))))

    def test_sums(self) -> None:
        """Unequal sums fail even when every prefix inequality holds"""
        dd = bip((1,), (1, 1))
        self.assertIsNone(gale_ryser_violation(dd))
        self.assertFalse(gale_ryser_check(dd))

    def test_graphs(self) -> None:
        """Degrees of actual graphs always pass"""
        rng = random.Random(20)
        for _ in range(200):
            self.assertTrue(gale_ryser_check(random_sequence(rng, 8, 8)))


class TestCleanCuts(unittest.TestCase):
    """Clean-cut members and capacities"""

    def test_members(self) -> None:
        """Larger degree first, larger index first among equal degrees"""
        dd = bip((2, 2, 1), (2, 2, 1))
        self.assertEqual(clean_cut_members(dd, CleanCutSpec(2, 1, 0)), (frozenset({2}), frozenset()))
        self.assertEqual(clean_cut_members(dd, CleanCutSpec(1, 1, 1)), (frozenset({1}), frozenset({2})))
        self.assertEqual(clean_cut_members(dd, CleanCutSpec(0, 0, 3)), (frozenset(), frozenset({1, 2, 3})))

    def test_capacity_examples(self) -> None:
        """Worked examples"""
        dd = bip((2, 1), (2, 1))
        self.assertEqual(clean_cut_capacity(dd, 2, CleanCutSpec(1, 1, 1)), 1)
        self.assertEqual(clean_cut_capacity(dd, 2, CleanCutSpec(1, 1, 1), CapacityRule.PRINTED), 1)
        self.assertEqual(clean_cut_capacity(dd, 2, CleanCutSpec(1, 0, 0), CapacityRule.PRINTED), 2)
        self.assertEqual(clean_cut_capacity(dd, 2, CleanCutSpec(1, 0, 0)), 1)

    def test_empty_source_side(self) -> None:
        """With p = q = 0 the capacity is the total source capacity"""
        rng = random.Random(21)
        for _ in range(100):
            dd = random_sequence(rng, 6, 6)
            nu = rng.randint(0, min(dd.n, dd.m))
            k = rng.randint(0, nu)
            for rule in CapacityRule:
                try:
                    net = build_network(dd, nu, k, rule)
                except degseq.NegativeCapacity:
                    continue
                expected = sum(arc.capacity for arc in net.arcs if arc.tail == net.source)
                self.assertEqual(clean_cut_capacity(dd, nu, CleanCutSpec(k, 0, 0), rule), expected)

    def test_bad_spec(self) -> None:
        """Invalid cardinalities are rejected"""
        dd = bip((2, 1), (2, 1))
        with self.assertRaises(degseq.BadParams):
            clean_cut_capacity(dd, 2, CleanCutSpec(1, 2, 0))
        with self.assertRaises(degseq.BadParams):
            clean_cut_capacity(dd, 2, CleanCutSpec(1, 0, 2))
        with self.assertRaises(degseq.BadParams):
            clean_cut_capacity(dd, 3, CleanCutSpec(0, 0, 0))
        with self.assertRaises(degseq.BadParams):
            minimum_clean_cut(dd, 1, 2)

    def test_spec_count(self) -> None:
        """There are (k + 1)(n + 1 - k) clean cuts for each k"""
        dd = bip((3, 2, 2, 1), (3, 2, 2, 1))
        for k in range(4):
            specs = [CleanCutSpec(k, p, q) for p in range(k + 1) for q in range(dd.n - k + 1)]
            self.assertEqual(len(specs), (k + 1) * (dd.n + 1 - k))

    def test_duality(self) -> None:
        """The smallest clean cut equals the maximum flow"""
        rng = random.Random(22)
        compared = 0
        while compared < 1000:
            dd = bounded_sequence(rng, 8, 8, 5)
            self.assertLessEqual(max(dd.d_a.values + dd.d_b.values, default=0), 5)
            nu = rng.randint(0, min(dd.n, dd.m))
            k = rng.randint(0, nu)
            cut = minimum_clean_cut(dd, nu, k)
            try:
                net = build_network(dd, nu, k)
            except degseq.NegativeCapacity:
                self.assertIsNone(cut)
                continue
            assert cut is not None
            with self.subTest(dd=str(dd), nu=nu, k=k):
                self.assertEqual(cut[0], max_flow(net).value)
                self.assertEqual(clean_cut_capacity(dd, nu, cut[1]), cut[0])
            compared += 1
        self.assertEqual(compared, 1000)

    def test_sweep_matches_formula(self) -> None:
        """The incremental sweep agrees with the direct formula on every clean cut"""
        rng = random.Random(23)
        for _ in range(100):
            dd = random_sequence(rng, 5, 5)
            nu = rng.randint(0, min(dd.n, dd.m))
            k = rng.randint(0, nu)
            cut = minimum_clean_cut(dd, nu, k)
            if cut is None:
                continue
            every = [
                clean_cut_capacity(dd, nu, CleanCutSpec(k, p, q)) for p in range(k + 1) for q in range(dd.n - k + 1)
            ]
            self.assertEqual(cut[0], min(every))


class TestInequalities(unittest.TestCase):
    """The inequality system and the achievable interval"""

    def test_examples(self) -> None:
        """Worked examples"""
        self.assertTrue(check_inequalities(bip((2, 1), (2, 1)), 2))
        self.assertFalse(check_inequalities(bip((2, 1), (2, 1)), 1))
        self.assertFalse(check_inequalities(bip((1, 1), (1, 1)), 1))
        self.assertTrue(check_inequalities(bip((1, 1), (1, 1)), 2))
        self.assertFalse(check_inequalities(bip((2, 1), (1, 1)), 1))
        self.assertFalse(check_inequalities(bip((1, 1), (1, 1)), 3))

    def test_agrees_with_flow(self) -> None:
        """The inequalities hold exactly when the flow method finds a realization"""
        rng = random.Random(24)
        for _ in range(150):
            dd = random_sequence(rng, 6, 6)
            for nu in range(min(dd.n, dd.m) + 1):
                with self.subTest(dd=str(dd), nu=nu):
                    expected = isinstance(find_realization(dd, nu), Realization)
                    self.assertEqual(check_inequalities(dd, nu), expected)

    def test_certificate(self) -> None:
        """Violated inequalities are reported for every k"""
        dd = bip((2, 1), (2, 1))
        cert = certificate(dd, 1)
        self.assertFalse(cert.feasible)
        self.assertEqual(cert.target, 2)
        self.assertEqual([v.spec.k for v in cert.violations], [0, 1])
        self.assertTrue(all(v.capacity < cert.target for v in cert.violations))
        self.assertTrue(all(clean_cut_capacity(dd, 1, v.spec) == v.capacity for v in cert.violations))
        cert = certificate(dd, 2)
        self.assertTrue(cert.feasible)
        self.assertEqual(cert.violations, ())
        cert = certificate(bip((1, 0), (1, 0)), 2)
        self.assertEqual(cert.skipped, (0, 1, 2))
        self.assertFalse(certificate(bip((2,), (1,)), 1).feasible)

    def test_interval_examples(self) -> None:
        """Worked examples"""
        self.assertEqual(matching_interval_bipartite(bip((2, 1, 1), (2, 1, 1))), (False, 2, 3))
        self.assertEqual(matching_interval_bipartite(bip((2, 2), (2, 2))), (False, 2, 2))
        result = matching_interval_bipartite(bip((3, 1), (2, 2)))
        self.assertTrue(result.empty)
        self.assertEqual(list(result.values()), [])

    def test_binary_matches_linear(self) -> None:
        """Binary search and the linear scan give the same interval without warnings"""
        rng = random.Random(25)
        for _ in range(100):
            dd = random_sequence(rng, 6, 6)
            with warnings.catch_warnings():
                warnings.simplefilter("error")
                linear = matching_interval_bipartite(dd, linear=True)
            self.assertEqual(linear, matching_interval_bipartite(dd))
            self.assertFalse(linear.empty)

    def test_linear_disagreement(self) -> None:
        """A linear scan that disagrees with binary search raises an inconsistency warning"""
        dd = bip((2, 1, 1), (2, 1, 1))
        other = BipartiteIntervalResult(empty=False, nu_min=1, nu_max=3)
        with mock.patch("degseq.cuts._linear_interval", return_value=other):
            with self.assertWarns(degseq.InconsistencyWarning):
                result = matching_interval_bipartite(dd, linear=True)
        self.assertEqual(result, other)
        self.assertTrue(issubclass(degseq.InconsistencyWarning, UserWarning))

    def test_large(self) -> None:
        """A 100 x 100 sequence is handled by the inequality sweep"""
        rng = random.Random(26)
        edges = [(i, j) for i in range(1, 101) for j in range(1, 101) if rng.random() < 0.2]
        d_a, d_b = LabeledBipartiteGraph(100, 100, edges).degrees()
        dd = bip(tuple(sorted(d_a, reverse=True)), tuple(sorted(d_b, reverse=True)))
        result = matching_interval_bipartite(dd)
        self.assertFalse(result.empty)
        assert result.nu_min is not None
        assert result.nu_max is not None
        self.assertLessEqual(result.nu_min, result.nu_max)
        self.assertTrue(check_inequalities(dd, result.nu_min))
        self.assertTrue(check_inequalities(dd, result.nu_max))
        if result.nu_min > 0:
            self.assertFalse(check_inequalities(dd, result.nu_min - 1))
        if result.nu_max < 100:
            self.assertFalse(check_inequalities(dd, result.nu_max + 1))


if __name__ == "__main__":
    unittest.main()
