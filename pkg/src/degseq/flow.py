#!/usr/bin/python3
"""Bipartite realizations with a prescribed matching number, by integral max flow

The network for (d_A, d_B, nu, k) has a source s, the A-vertices v_i, the
B-vertices w_j and a sink t.  A flow of value sum(a_i) - nu exists for some
0 <= k <= nu exactly when some realization has matching number nu; the
realization is read back from the saturated middle arcs together with the
matching v_i w_(nu+1-i), i = 1 .. nu.
"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import enum
import functools
from collections import deque
from typing import NamedTuple, Union

from . import (
    BadParams,
    BipartiteDegreeSequence,
    LabeledBipartiteGraph,
    NegativeCapacity,
    maximum_matching,
)

__all__ = [
    "Arc",
    "CapacityRule",
    "FlowNetwork",
    "Infeasible",
    "IntegralFlow",
    "Realization",
    "build_network",
    "find_realization",
    "flow_target",
    "forced_matching",
    "max_flow",
    "realize_bipartite_with_nu",
    "verify_canonical_structure",
]


class CapacityRule(enum.Enum):
    """Which source and sink arcs lose one unit of capacity

    MATCHED reduces the arcs of every vertex covered by the forced matching,
    v_1 .. v_nu and w_1 .. w_nu.  PRINTED reduces only v_1 .. v_k and
    w_1 .. w_(nu-k), which does not keep the degrees of the other matched
    vertices exact; it is available for comparison.
    """

    MATCHED = "matched"
    PRINTED = "printed"

    def reduced(self, nu: int, k: int) -> tuple[int, int]:
        """Number of leading A-arcs and B-arcs whose capacity is reduced by one"""
        if self is CapacityRule.PRINTED:
            return k, nu - k
        return nu, nu


class Arc(NamedTuple):
    """A directed arc with an integer capacity"""

    tail: int
    head: int
    capacity: int


class FlowNetwork(NamedTuple):
    """A source/sink network on nodes 0 .. node_count - 1

    The source is node 0, v_i is node i, w_j is node n + j and the sink is
    node n + m + 1.
    """

    n: int
    m: int
    arcs: tuple[Arc, ...]

    @property
    def node_count(self) -> int:
        """Number of nodes, including source and sink"""
        return self.n + self.m + 2

    @property
    def source(self) -> int:
        """The source node"""
        return 0

    @property
    def sink(self) -> int:
        """The sink node"""
        return self.n + self.m + 1

    def node_a(self, i: int) -> int:
        """The node of v_i"""
        return i

    def node_b(self, j: int) -> int:
        """The node of w_j"""
        return self.n + j

    @property
    def _by_endpoints(self) -> dict[tuple[int, int], int]:
        return {(arc.tail, arc.head): idx for idx, arc in enumerate(self.arcs)}

    def arc_index(self, tail: int, head: int) -> int | None:
        """Position of the arc (tail, head) in ``arcs``, or None"""
        return self._by_endpoints.get((tail, head))

    def capacity(self, tail: int, head: int) -> int | None:
        """Capacity of the arc (tail, head), or None if there is no such arc"""
        idx = self.arc_index(tail, head)
        return None if idx is None else self.arcs[idx].capacity

    def middle_arcs(self) -> list[tuple[int, int]]:
        """Pairs (i, j) for the arcs v_i -> w_j"""
        return [(arc.tail, arc.head - self.n) for arc in self.arcs if 1 <= arc.tail <= self.n]


class IntegralFlow(NamedTuple):
    """A flow, one value per arc of its network, and its total value"""

    flows: tuple[int, ...]
    value: int


def flow_target(dd: BipartiteDegreeSequence, nu: int) -> int:
    """The flow value that certifies matching number nu"""
    return dd.d_a.total - nu


def forced_matching(nu: int) -> list[tuple[int, int]]:
    """The matching v_i w_(nu+1-i), i = 1 .. nu"""
    return [(i, nu + 1 - i) for i in range(1, nu + 1)]


def build_network(
    dd: BipartiteDegreeSequence,
    nu: int,
    k: int,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> FlowNetwork:
    """Build the network for (dd, nu, k)

    The arc v_i -> w_j is present unless i > k and j > nu - k (the edge would
    avoid the cover) or i + j = nu + 1 (the edge is in the forced matching).
    """
    n, m = dd.n, dd.m
    if not 0 <= k <= nu <= min(n, m):
        raise BadParams(f"need 0 <= k <= nu <= min(n, m), got k={k} nu={nu} n={n} m={m}")
    reduced_a, reduced_b = rule.reduced(nu, k)
    for i in range(1, reduced_a + 1):
        if dd.d_a.degree(i) == 0:
            raise NegativeCapacity(f"a_{i} = 0 but the arc (s, v{i}) is reduced (nu={nu}, k={k})")
    for j in range(1, reduced_b + 1):
        if dd.d_b.degree(j) == 0:
            raise NegativeCapacity(f"b_{j} = 0 but the arc (w{j}, t) is reduced (nu={nu}, k={k})")

    sink = n + m + 1
    arcs = [Arc(0, i, dd.d_a.degree(i) - (i <= reduced_a)) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if (i > k and j > nu - k) or i + j == nu + 1:
                continue
            arcs.append(Arc(i, n + j, 1))
    arcs.extend(Arc(n + j, sink, dd.d_b.degree(j) - (j <= reduced_b)) for j in range(1, m + 1))
    return FlowNetwork(n, m, tuple(arcs))


def max_flow(net: FlowNetwork) -> IntegralFlow:
    """Compute a maximum integral flow with Dinic's algorithm

    Arcs are explored in the order they appear in the network, so the
    result is a function of the network alone.
    """
    source, sink = net.source, net.sink
    # residual arc e and its reverse are stored at positions e and e ^ 1
    head: list[int] = []
    residual: list[int] = []
    out: list[list[int]] = [[] for _ in range(net.node_count)]
    for arc in net.arcs:
        out[arc.tail].append(len(head))
        head.append(arc.head)
        residual.append(arc.capacity)
        out[arc.head].append(len(head))
        head.append(arc.tail)
        residual.append(0)

    value = 0
    while True:
        level = [-1] * net.node_count
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in out[u]:
                if residual[e] > 0 and level[head[e]] < 0:
                    level[head[e]] = level[u] + 1
                    queue.append(head[e])
        if level[sink] < 0:
            break

        pointer = [0] * net.node_count
        while True:
            path: list[int] = []
            u = source
            while u != sink:
                while pointer[u] < len(out[u]):
                    e = out[u][pointer[u]]
                    if residual[e] > 0 and level[head[e]] == level[u] + 1:
                        break
                    pointer[u] += 1
                else:
                    if u == source:
                        break
                    level[u] = -1
                    u = head[path.pop() ^ 1]
                    pointer[u] += 1
                    continue
                path.append(e)
                u = head[e]
            if u != sink:
                break
            pushed = min(residual[e] for e in path)
            for e in path:
                residual[e] -= pushed
                residual[e ^ 1] += pushed
            value += pushed

    flows = tuple(arc.capacity - residual[2 * idx] for idx, arc in enumerate(net.arcs))
    return IntegralFlow(flows, value)


class Realization(NamedTuple):
    """A realization found by the flow method, with the k whose network succeeded"""

    graph: LabeledBipartiteGraph
    k: int


class Infeasible(NamedTuple):
    """No realization has the requested matching number

    ``flow_values[k]`` is the maximum flow value of the network for k, or None
    when that network was skipped because a capacity would be negative.
    """

    reason: str
    nu: int
    target: int
    flow_values: tuple[int | None, ...]


FlowResult = Union[Realization, Infeasible]


def _extract(net: FlowNetwork, flow: IntegralFlow, nu: int) -> LabeledBipartiteGraph:
    edges = forced_matching(nu)
    for arc, f in zip(net.arcs, flow.flows):
        if f and 1 <= arc.tail <= net.n:
            edges.append((arc.tail, arc.head - net.n))
    return LabeledBipartiteGraph(net.n, net.m, edges)


def find_realization(
    dd: BipartiteDegreeSequence,
    nu: int,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> FlowResult:
    """Find a realization of dd with matching number nu, scanning k = 0 .. nu"""
    if not 0 <= nu <= min(dd.n, dd.m):
        raise BadParams(f"nu={nu} must lie in [0, min(n, m)] = [0, {min(dd.n, dd.m)}]")
    target = flow_target(dd, nu)
    if not dd.sums_equal:
        return Infeasible(
            f"degree sums differ ({dd.d_a.total} != {dd.d_b.total})",
            nu,
            target,
            (),
        )
    values: list[int | None] = []
    for k in range(nu + 1):
        try:
            net = build_network(dd, nu, k, rule)
        except NegativeCapacity:
            values.append(None)
            continue
        flow = max_flow(net)
        values.append(flow.value)
        if flow.value == target:
            return Realization(_extract(net, flow, nu), k)
    return Infeasible(f"no k in 0..{nu} reaches flow value {target}", nu, target, tuple(values))


def realize_bipartite_with_nu(
    dd: BipartiteDegreeSequence,
    nu: int,
    rule: CapacityRule = CapacityRule.MATCHED,
) -> LabeledBipartiteGraph | Infeasible:
    """Return a realization of dd with matching number nu, or Infeasible"""
    result = find_realization(dd, nu, rule)
    if isinstance(result, Realization):
        return result.graph
    return result


def verify_canonical_structure(g: LabeledBipartiteGraph, nu: int, k: int) -> bool:
    """Check that v_i w_(nu+1-i) is a maximum matching of g and v_1..v_k, w_1..w_(nu-k) a cover"""
    if not 0 <= k <= nu <= min(g.n, g.m):
        return False
    if not all(g.has_edge(i, j) for i, j in forced_matching(nu)):
        return False
    if maximum_matching(g).size != nu:
        return False
    return all(i <= k or j <= nu - k for i, j in g.edges)
