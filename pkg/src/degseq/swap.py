# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only
"""Bipartite swaps between realizations of the same bipartite degree sequence"""

from __future__ import annotations

from typing import NamedTuple

from . import (
    BipartiteDegreeSequence,
    InternalInconsistency,
    InvalidSequence,
    InvalidSwap,
    LabeledBipartiteGraph,
    MismatchedSequences,
    OutOfRange,
    maximum_matching,
)
from .cuts import BipartiteIntervalResult, matching_interval_bipartite
from .flow import realize_bipartite_with_nu

__all__ = [
    "SwapStep",
    "WalkEntry",
    "apply_swap",
    "canonicalize",
    "interpolate_nu",
    "swap_path",
    "swap_walk",
]


class SwapStep(NamedTuple):
    """Replace the edges v_i w_j, v_i2 w_j2 by v_i w_j2, v_i2 w_j"""

    i: int
    i2: int
    j: int
    j2: int

    def reverse(self) -> SwapStep:
        """The step that undoes this one"""
        return SwapStep(self.i, self.i2, self.j2, self.j)

    def __str__(self) -> str:
        """Implement str()"""
        return f"v{self.i}w{self.j} v{self.i2}w{self.j2} -> v{self.i}w{self.j2} v{self.i2}w{self.j}"


def apply_swap(g: LabeledBipartiteGraph, step: SwapStep) -> LabeledBipartiteGraph:
    """Return g with the swap applied"""
    i, i2, j, j2 = step
    if not (g.has_edge(i, j) and g.has_edge(i2, j2)):
        raise InvalidSwap(f"{step}: v{i}w{j} and v{i2}w{j2} must both be edges")
    if g.has_edge(i, j2) or g.has_edge(i2, j):
        raise InvalidSwap(f"{step}: v{i}w{j2} and v{i2}w{j} must both be non-edges")
    return g.replace_edges([(i, j), (i2, j2)], [(i, j2), (i2, j)])


def canonicalize(g: LabeledBipartiteGraph) -> list[SwapStep]:
    """Swaps that turn g into the greedy realization of its degrees

    Row by row, v_i is given the d(v_i) columns of largest residual degree
    (ties to the smaller index).  While v_i misses a target column w_j and
    has a non-target column w_j', some later row has w_j but not w_j', and
    one swap fixes w_j for v_i.
    """
    deg_a, deg_b = g.degrees()
    residual = list(deg_b)
    steps = []
    for i in range(1, g.n + 1):
        target = set(sorted(range(1, g.m + 1), key=lambda j: (-residual[j - 1], j))[: deg_a[i - 1]])
        while True:
            current = set(g.neighbors_a(i))
            if current == target:
                break
            j = min(target - current)
            j2 = min(current - target)
            i2 = next(r for r in range(i + 1, g.n + 1) if g.has_edge(r, j) and not g.has_edge(r, j2))
            step = SwapStep(i, i2, j2, j)
            g = apply_swap(g, step)
            steps.append(step)
        for j in target:
            residual[j - 1] -= 1
    return steps


def swap_path(g1: LabeledBipartiteGraph, g2: LabeledBipartiteGraph) -> list[SwapStep]:
    """Swaps that turn g1 into g2"""
    if (g1.n, g1.m) != (g2.n, g2.m) or g1.degrees() != g2.degrees():
        raise MismatchedSequences("the graphs do not have the same per-vertex degrees")
    if g1.edges == g2.edges:
        return []
    return canonicalize(g1) + [step.reverse() for step in reversed(canonicalize(g2))]


class WalkEntry(NamedTuple):
    """One graph on a swap walk; ``step`` led to it from the previous entry"""

    step: SwapStep | None
    graph: LabeledBipartiteGraph
    nu: int


def _endpoint(dd: BipartiteDegreeSequence, nu: int) -> LabeledBipartiteGraph:
    result = realize_bipartite_with_nu(dd, nu)
    if not isinstance(result, LabeledBipartiteGraph):
        raise InternalInconsistency(f"nu={nu} is an interval endpoint for {dd} but the flow is short")
    return result


def swap_walk(dd: BipartiteDegreeSequence, interval: BipartiteIntervalResult | None = None) -> list[WalkEntry]:
    """Walk by swaps from a realization with matching number nu_min to one with nu_max"""
    if interval is None:
        interval = matching_interval_bipartite(dd)
    if interval.nu_min is None or interval.nu_max is None:
        raise InvalidSequence(f"{dd} has no realization")
    g = _endpoint(dd, interval.nu_min)
    goal = _endpoint(dd, interval.nu_max)
    walk = [WalkEntry(None, g, maximum_matching(g).size)]
    for step in swap_path(g, goal):
        g = apply_swap(g, step)
        walk.append(WalkEntry(step, g, maximum_matching(g).size))
    return walk


def interpolate_nu(dd: BipartiteDegreeSequence, nu: int) -> LabeledBipartiteGraph:
    """Return a realization of dd with matching number nu, found along a swap walk"""
    interval = matching_interval_bipartite(dd)
    if nu not in interval.values():
        raise OutOfRange(f"nu={nu} is outside the achievable matching numbers {interval} of {dd}")
    return next(entry.graph for entry in swap_walk(dd, interval) if entry.nu == nu)
