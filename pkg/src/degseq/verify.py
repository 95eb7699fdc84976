# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only
"""Cross-check the formulas, inequalities and constructions against the oracle"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, NamedTuple

from . import BipartiteDegreeSequence, DegreeSequence, maximum_matching, tree_matching_number
from .cuts import check_inequalities, gale_ryser_check, matching_interval_bipartite, minimum_clean_cut
from .flow import Realization, build_network, find_realization, max_flow, verify_canonical_structure
from .oracle import achievable_nu_set_bipartite, achievable_nu_set_tree, enumerate_bipartite
from .tree import is_tree_degree_sequence, matching_interval_tree, realize_tree_with_nu

if TYPE_CHECKING:
    from collections.abc import Iterator

__all__ = ["Counterexample", "Report", "sweep_bipartite", "sweep_trees"]


class Counterexample(NamedTuple):
    """The first disagreement found by a sweep"""

    check: str
    instance: str
    expected: str
    actual: str

    def __str__(self) -> str:
        """Implement str()"""
        return f"{self.check} failed for {self.instance}: expected {self.expected}, got {self.actual}"


class Report(NamedTuple):
    """Outcome of a sweep: how many instances and checks ran, and the first counterexample if any"""

    instances: int
    checks: int
    counterexample: Counterexample | None

    @property
    def passed(self) -> bool:
        """True if no check failed"""
        return self.counterexample is None


def nonincreasing_sequences(length: int, max_value: int, min_value: int = 0) -> Iterator[tuple[int, ...]]:
    """Every nonincreasing tuple of the given length with entries in [min_value, max_value]"""
    yield from itertools.combinations_with_replacement(range(max_value, min_value - 1, -1), length)


class _Tally:
    def __init__(self) -> None:
        self.instances = 0
        self.checks = 0

    def report(self, counterexample: Counterexample | None = None) -> Report:
        return Report(self.instances, self.checks, counterexample)


def sweep_trees(max_n: int = 9) -> Report:
    """Check the tree interval and constructions for every positive sequence summing to 2(n-1), 3 <= n <= max_n"""
    tally = _Tally()
    for n in range(3, max_n + 1):
        for values in nonincreasing_sequences(n, n - 1, 1):
            if sum(values) != 2 * (n - 1):
                continue
            d = DegreeSequence(values)
            tally.instances += 1
            achieved = achievable_nu_set_tree(d)
            tally.checks += 1
            if is_tree_degree_sequence(d) != bool(achieved):
                return tally.report(
                    Counterexample("tree recognition", str(d), str(bool(achieved)), str(is_tree_degree_sequence(d))),
                )
            interval = matching_interval_tree(d)
            tally.checks += 1
            if set(interval.values()) != achieved:
                return tally.report(Counterexample("tree interval", str(d), str(sorted(achieved)), str(interval)))
            for nu in interval.values():
                t = realize_tree_with_nu(d, nu)
                tally.checks += 1
                if t.degrees() != d.values or tree_matching_number(t) != nu:
                    return tally.report(
                        Counterexample(
                            "tree construction",
                            f"{d} nu={nu}",
                            f"degrees {d.values}, nu={nu}",
                            f"degrees {t.degrees()}, nu={tree_matching_number(t)}",
                        ),
                    )
    return tally.report()


def _check_bipartite(dd: BipartiteDegreeSequence, tally: _Tally) -> Counterexample | None:
    instance = str(dd)
    realizable = next(iter(enumerate_bipartite(dd)), None) is not None
    tally.checks += 1
    if gale_ryser_check(dd) != realizable:
        return Counterexample("Gale-Ryser", instance, str(realizable), str(gale_ryser_check(dd)))
    achieved = achievable_nu_set_bipartite(dd)
    feasible = []
    for nu in range(min(dd.n, dd.m) + 1):
        expected = nu in achieved
        tally.checks += 1
        if check_inequalities(dd, nu) != expected:
            return Counterexample("inequalities", f"{instance} nu={nu}", str(expected), str(not expected))
        if expected:
            feasible.append(nu)

        result = find_realization(dd, nu)
        tally.checks += 1
        if isinstance(result, Realization) != expected:
            return Counterexample("flow feasibility", f"{instance} nu={nu}", str(expected), str(not expected))
        if isinstance(result, Realization):
            g = result.graph
            tally.checks += 1
            if not (g.realizes(dd) and maximum_matching(g).size == nu and verify_canonical_structure(g, nu, result.k)):
                return Counterexample("flow realization", f"{instance} nu={nu}", f"nu={nu}", str(g))

        if dd.sums_equal:
            duality = _check_duality(dd, nu, tally)
            if duality is not None:
                return duality

    tally.checks += 1
    if feasible != list(range(feasible[0], feasible[-1] + 1) if feasible else []):
        return Counterexample("intervality", instance, "a contiguous set", str(feasible))
    interval = matching_interval_bipartite(dd)
    tally.checks += 1
    if list(interval.values()) != feasible:
        return Counterexample("bipartite interval", instance, str(feasible), str(interval))
    return None


def _check_duality(dd: BipartiteDegreeSequence, nu: int, tally: _Tally) -> Counterexample | None:
    for k in range(nu + 1):
        cut = minimum_clean_cut(dd, nu, k)
        if cut is None:
            continue
        value = max_flow(build_network(dd, nu, k)).value
        tally.checks += 1
        if cut[0] != value:
            return Counterexample("min clean cut = max flow", f"{dd} nu={nu} k={k}", str(value), str(cut))
    return None


def sweep_bipartite(max_n: int = 4, max_m: int = 4, max_deg: int = 3) -> Report:
    """Check the bipartite results for all sequences with n <= max_n, m <= max_m and entries <= max_deg"""
    tally = _Tally()
    for n, m in itertools.product(range(1, max_n + 1), range(1, max_m + 1)):
        for d_a, d_b in itertools.product(nonincreasing_sequences(n, max_deg), nonincreasing_sequences(m, max_deg)):
            dd = BipartiteDegreeSequence.of(d_a, d_b)
            tally.instances += 1
            counterexample = _check_bipartite(dd, tally)
            if counterexample is not None:
                return tally.report(counterexample)
    return tally.report()

