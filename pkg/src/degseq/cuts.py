#!/usr/bin/python3
"""Clean cuts and the inequality system for bipartite matching numbers

A matching number nu is achievable for (d_A, d_B) exactly when, for some
0 <= k <= nu, every clean cut of the network for (d_A, d_B, nu, k) has
capacity at least sum(a_i) - nu.  A clean cut is fixed by three numbers
(k, p, q): its source side holds the p best ranked vertices of
v_1 .. v_k and the q best ranked vertices of v_(k+1) .. v_n, where the rank
is larger degree first and, among equal degrees, larger index first.
"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import bisect
import warnings
from typing import NamedTuple

from . import BadParams, BipartiteDegreeSequence, InconsistencyWarning, canonical_realization, maximum_matching
from .flow import CapacityRule, flow_target

__all__ = [
    "BipartiteIntervalResult",
    "Certificate",
    "CleanCutSpec",
    "Violation",
    "certificate",
    "check_inequalities",
    "clean_cut_capacity",
    "clean_cut_members",
    "gale_ryser_check",
    "gale_ryser_violation",
    "matching_interval_bipartite",
    "minimum_clean_cut",
]


def _sums_of_min(values: list[int], top: int) -> list[int]:
    """Return ``[sum(min(v, x) for v in values) for x in range(top + 1)]``"""
    count = [0] * (top + 2)
    for v in values:
        count[min(v, top + 1)] += 1
    result = [0]
    at_least = len(values) - count[0]
    for x in range(1, top + 1):
        result.append(result[-1] + at_least)
        at_least -= count[x]
    return result


def gale_ryser_violation(dd: BipartiteDegreeSequence) -> int | None:
    """Return the first k with a_1 + ... + a_k > sum(min(b_j, k)), or None"""
    bound = _sums_of_min(list(dd.d_b.values), dd.n)
    prefix = 0
    for k, a in enumerate(dd.d_a.values, 1):
        prefix += a
        if prefix > bound[k]:
            return k
    return None


def gale_ryser_check(dd: BipartiteDegreeSequence) -> bool:
    """Return True if some bipartite graph realizes dd"""
    return dd.sums_equal and gale_ryser_violation(dd) is None


class CleanCutSpec(NamedTuple):
    """Cardinalities fixing a clean cut: |S_1| = p inside v_1..v_k, |S_2| = q inside v_(k+1)..v_n"""

    k: int
    p: int
    q: int


def _rank_order(dd: BipartiteDegreeSequence) -> list[int]:
    """A-indices ordered by degree descending, then index descending"""
    return sorted(range(1, dd.n + 1), key=lambda i: (-dd.d_a.degree(i), -i))


def _validate(dd: BipartiteDegreeSequence, nu: int, spec: CleanCutSpec) -> None:
    if not 0 <= nu <= min(dd.n, dd.m):
        raise BadParams(f"nu={nu} must lie in [0, min(n, m)] = [0, {min(dd.n, dd.m)}]")
    if not (0 <= spec.p <= spec.k <= nu and 0 <= spec.q <= dd.n - spec.k):
        raise BadParams(f"{spec} is not a clean cut for nu={nu}, n={dd.n}")


def clean_cut_members(dd: BipartiteDegreeSequence, spec: CleanCutSpec) -> tuple[frozenset[int], frozenset[int]]:
    """Materialize (S_1, S_2) as sets of A-indices"""
    order = _rank_order(dd)
    s1 = [i for i in order if i <= spec.k][: spec.p]
    s2 = [i for i in order if i > spec.k][: spec.q]
    return frozenset(s1), frozenset(s2)


def _capacities(
    dd: BipartiteDegreeSequence,
    nu: int,
    k: int,
    rule: CapacityRule,
) -> tuple[list[int], list[int]]:
    """Source and sink arc capacities, 0-based lists; entries may be negative"""
    reduced_a, reduced_b = rule.reduced(nu, k)
    source = [a - (i <= reduced_a) for i, a in enumerate(dd.d_a.values, 1)]
    sink = [b - (j <= reduced_b) for j, b in enumerate(dd.d_b.values, 1)]
    return source, sink


def clean_cut_capacity(
    dd: BipartiteDegreeSequence,
    nu: int,
    spec: CleanCutSpec,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> int:
    """Capacity of the cheapest s-t cut whose source side meets the A-vertices in S_1 + S_2

    This is the source capacity of the A-vertices left out plus, for each
    w_j, the smaller of its sink capacity and its number of in-neighbors
    in S_1 + S_2.
    """
    _validate(dd, nu, spec)
    k = spec.k
    s1, s2 = clean_cut_members(dd, spec)
    inside = s1 | s2
    source, sink = _capacities(dd, nu, k, rule)
    total = sum(c for i, c in enumerate(source, 1) if i not in inside)
    for j, t in enumerate(sink, 1):
        partner = nu + 1 - j
        if j <= nu - k:
            in_neighbors = len(inside) - (partner in inside)
        else:
            in_neighbors = len(s1) - (1 <= partner <= k and partner in s1)
        total += min(t, in_neighbors)
    return total


class _Sweep:
    """Evaluate every clean cut for one (nu, k) in O(log n) per cut"""

    def __init__(self, dd: BipartiteDegreeSequence, nu: int, k: int, rule: CapacityRule) -> None:
        """Precompute the per-p and per-q terms of the capacity"""
        self.n = dd.n
        self.k = k
        source, sink = _capacities(dd, nu, k, rule)
        self.admissible = min(source, default=0) >= 0 and min(sink, default=0) >= 0
        if not self.admissible:
            return
        order = _rank_order(dd)
        self.first = [i for i in order if i <= k]
        self.second = [i for i in order if i > k]
        self.source_total = sum(source)

        head = sink[: nu - k]
        self.head_sums = _sums_of_min(head, dd.n)
        tail_sums = _sums_of_min(sink[nu - k :], k)

        # p-dependent part: tail columns minus the source arcs of S_1
        self.by_p = [tail_sums[0]]
        removed = 0
        missing: list[int] = []
        for p, i in enumerate(self.first, 1):
            removed += source[i - 1]
            bisect.insort(missing, sink[nu - i])
            self.by_p.append(tail_sums[p] - (len(missing) - bisect.bisect_left(missing, p)) - removed)

        self.second_removed = [0]
        self.head_missing: list[list[int]] = [[]]
        for i in self.second:
            self.second_removed.append(self.second_removed[-1] + source[i - 1])
            snapshot = list(self.head_missing[-1])
            if i <= nu:
                bisect.insort(snapshot, sink[nu - i])
            self.head_missing.append(snapshot)

    def capacity(self, p: int, q: int) -> int:
        """Capacity of the clean cut (k, p, q)"""
        x = p + q
        missing = self.head_missing[q]
        head = self.head_sums[x] - (len(missing) - bisect.bisect_left(missing, x))
        return self.source_total - self.second_removed[q] + head + self.by_p[p]

    def minimum(self, floor: int | None = None) -> tuple[int, CleanCutSpec]:
        """Return the smallest capacity and its cut, stopping early at any capacity below ``floor``"""
        best: tuple[int, CleanCutSpec] | None = None
        for p in range(self.k + 1):
            for q in range(self.n - self.k + 1):
                value = self.capacity(p, q)
                if best is None or value < best[0]:
                    best = (value, CleanCutSpec(self.k, p, q))
                    if floor is not None and value < floor:
                        return best
        assert best is not None
        return best


def minimum_clean_cut(
    dd: BipartiteDegreeSequence,
    nu: int,
    k: int,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> tuple[int, CleanCutSpec] | None:
    """Smallest clean-cut capacity for (nu, k) and a cut attaining it

    Returns None when some arc capacity of the network would be negative.
    """
    if not 0 <= k <= nu <= min(dd.n, dd.m):
        raise BadParams(f"need 0 <= k <= nu <= min(n, m), got k={k} nu={nu} n={dd.n} m={dd.m}")
    sweep = _Sweep(dd, nu, k, rule)
    if not sweep.admissible:
        return None
    return sweep.minimum()


def check_inequalities(
    dd: BipartiteDegreeSequence,
    nu: int,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> bool:
    """Return True if some realization of dd has matching number nu"""
    if not (dd.sums_equal and 0 <= nu <= min(dd.n, dd.m)):
        return False
    target = flow_target(dd, nu)
    for k in range(nu + 1):
        sweep = _Sweep(dd, nu, k, rule)
        if sweep.admissible and sweep.minimum(floor=target)[0] >= target:
            return True
    return False


class Violation(NamedTuple):
    """A clean cut whose capacity is below the target flow value"""

    spec: CleanCutSpec
    capacity: int


class Certificate(NamedTuple):
    """Why nu is or is not achievable

    When ``feasible_k`` is None there is one violated inequality per k in
    ``violations``, except for the k listed in ``skipped`` whose networks
    would have a negative capacity.
    """

    nu: int
    target: int
    feasible_k: int | None
    violations: tuple[Violation, ...]
    skipped: tuple[int, ...]
    reason: str

    @property
    def feasible(self) -> bool:
        """True if nu is achievable"""
        return self.feasible_k is not None


def certificate(
    dd: BipartiteDegreeSequence,
    nu: int,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> Certificate:
    """Certify whether matching number nu is achievable for dd"""
    if not 0 <= nu <= min(dd.n, dd.m):
        raise BadParams(f"nu={nu} must lie in [0, min(n, m)] = [0, {min(dd.n, dd.m)}]")
    target = flow_target(dd, nu)
    if not dd.sums_equal:
        return Certificate(nu, target, None, (), (), f"degree sums differ ({dd.d_a.total} != {dd.d_b.total})")
    violations = []
    skipped = []
    for k in range(nu + 1):
        sweep = _Sweep(dd, nu, k, rule)
        if not sweep.admissible:
            skipped.append(k)
            continue
        value, spec = sweep.minimum()
        if value >= target:
            return Certificate(nu, target, k, (), (), f"every clean cut for k={k} has capacity >= {target}")
        violations.append(Violation(spec, value))
    return Certificate(
        nu,
        target,
        None,
        tuple(violations),
        tuple(skipped),
        f"every k in 0..{nu} has a clean cut below {target}",
    )


class BipartiteIntervalResult(NamedTuple):
    """The achievable matching numbers of a bipartite degree sequence"""

    empty: bool
    nu_min: int | None
    nu_max: int | None

    def values(self) -> range:
        """Every achievable matching number"""
        if self.nu_min is None or self.nu_max is None:
            return range(0)
        return range(self.nu_min, self.nu_max + 1)


def _linear_interval(dd: BipartiteDegreeSequence, rule: CapacityRule) -> BipartiteIntervalResult:
    feasible = [nu for nu in range(min(dd.n, dd.m) + 1) if check_inequalities(dd, nu, rule)]
    if not feasible:
        return BipartiteIntervalResult(empty=True, nu_min=None, nu_max=None)
    if feasible != list(range(feasible[0], feasible[-1] + 1)):
        warnings.warn(
            f"achievable matching numbers {feasible} of {dd} are not contiguous",
            InconsistencyWarning,
            stacklevel=3,
        )
    return BipartiteIntervalResult(empty=False, nu_min=feasible[0], nu_max=feasible[-1])


def matching_interval_bipartite(
    dd: BipartiteDegreeSequence,
    *,
    linear: bool = False,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> BipartiteIntervalResult:
    """Return [nu_min, nu_max] for dd, or an empty result if dd has no realization

    The matching number of the greedy realization is achievable, and the
    achievable values form an interval, so each endpoint is found by binary
    search on its side of it.  With ``linear`` every nu is tested instead,
    and the two answers are compared.
    """
    if not gale_ryser_check(dd):
        return BipartiteIntervalResult(empty=True, nu_min=None, nu_max=None)
    probe = maximum_matching(canonical_realization(dd)).size

    lo, hi = 0, probe
    while lo < hi:
        mid = (lo + hi) // 2
        if check_inequalities(dd, mid, rule):
            hi = mid
        else:
            lo = mid + 1
    nu_min = lo

    lo, hi = probe, min(dd.n, dd.m)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if check_inequalities(dd, mid, rule):
            lo = mid
        else:
            hi = mid - 1
    result = BipartiteIntervalResult(empty=False, nu_min=nu_min, nu_max=lo)

    if linear:
        scanned = _linear_interval(dd, rule)
        if scanned != result:
            warnings.warn(
                f"binary search gave {result} but a linear scan gave {scanned} for {dd}",
                InconsistencyWarning,
                stacklevel=2,
            )
        return scanned
    return result
