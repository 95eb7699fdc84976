#!/usr/bin/python3
"""Command-line access to matching-number intervals, realizations and checks"""

# SPDX-FileCopyrightText: 2024 degseq contributors
#
# SPDX-License-Identifier: GPL-3.0-only

from __future__ import annotations

import contextlib
import json
import re
import sys
import warnings
from typing import TYPE_CHECKING, Any, NoReturn

import click

from . import (
    BipartiteDegreeSequence,
    DegreeSequence,
    DegSeqError,
    InconsistencyWarning,
    InternalInconsistency,
    LabeledBipartiteGraph,
    LabeledTree,
)
from .cuts import gale_ryser_check, gale_ryser_violation, matching_interval_bipartite
from .flow import Realization, find_realization
from .swap import interpolate_nu, swap_path, swap_walk
from .tree import is_tree_degree_sequence, matching_interval_tree, realize_tree_with_nu
from .verify import Report, sweep_bipartite, sweep_trees

if TYPE_CHECKING:
    from collections.abc import Iterator
    from typing import TextIO


def inconsistent(message: str) -> NoReturn:
    """Report disagreeing computations and exit with status 1"""
    click.echo(f"internal inconsistency: {message}", err=True)
    sys.exit(1)


@contextlib.contextmanager
def usage_errors() -> Iterator[None]:
    """Report library errors as usage errors (exit status 2) and inconsistencies with exit status 1"""
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", InconsistencyWarning)
            yield
    except (InternalInconsistency, InconsistencyWarning) as e:
        inconsistent(str(e))
    except DegSeqError as e:
        raise click.UsageError(str(e)) from e


def parse_sequence(ctx: Any, param: click.Parameter, value: str | None) -> DegreeSequence | None:  # noqa: ARG001
    """Parse a degree sequence option, sorting it nonincreasingly"""
    if value is None:
        return None
    try:
        d, permutation = DegreeSequence.parse(value)
    except DegSeqError as e:
        raise click.BadParameter(str(e)) from e
    if list(permutation) != sorted(permutation):
        click.echo(
            f"note: sorted --{param.name} nonincreasingly; the entries now come from input positions"
            f" {','.join(str(p) for p in permutation)}",
            err=True,
        )
    return d


EDGE_RE = re.compile(r"^\s*v(\d+)\s+w(\d+)\s*$")


def parse_edge_list(stream: TextIO, n: int | None, m: int | None) -> LabeledBipartiteGraph:
    """Read ``v<i> w<j>`` lines into a graph; vertex counts default to the largest index seen"""
    edges = []
    for lineno, line in enumerate(stream, 1):
        stripped = line.split("#", 1)[0]
        if not stripped.strip():
            continue
        match = EDGE_RE.match(stripped)
        if match is None:
            raise click.UsageError(f"{stream.name}:{lineno}: expected 'v<i> w<j>', got {line.strip()!r}")
        edges.append((int(match.group(1)), int(match.group(2))))
    if n is None:
        n = max((i for i, _ in edges), default=0)
    if m is None:
        m = max((j for _, j in edges), default=0)
    with usage_errors():
        return LabeledBipartiteGraph(n, m, edges)


def emit(data: Any) -> None:
    """Print one JSON document"""
    click.echo(json.dumps(data))


def tree_json(t: LabeledTree, nu: int) -> dict[str, Any]:
    """JSON form of a tree realization"""
    return {"n": t.n, "nu": nu, "edges": [list(e) for e in t.sorted_edges()]}


def graph_json(g: LabeledBipartiteGraph) -> dict[str, Any]:
    """JSON form of a bipartite graph"""
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]}


def report_json(report: Report) -> dict[str, Any]:
    """JSON form of a sweep report"""
    return {
        "instances": report.instances,
        "checks": report.checks,
        "passed": report.passed,
        "counterexample": None if report.counterexample is None else str(report.counterexample),
    }


seq_option = click.option("--seq", required=True, callback=parse_sequence, help="Tree degree sequence, e.g. 3,3,2,1")
a_option = click.option("--a", "a", required=True, callback=parse_sequence, help="Degrees of v_1 .. v_n")
b_option = click.option("--b", "b", required=True, callback=parse_sequence, help="Degrees of w_1 .. w_m")
format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "edges"]),
    default="json",
    help="Output format (default: json)",
)


@click.group()
def main() -> None:
    """Achievable matching numbers of tree and bipartite degree sequences"""


@main.command("tree-check")
@seq_option
def tree_check(seq: DegreeSequence) -> None:
    """Decide whether SEQ is the degree sequence of a tree"""
    emit({"tree": is_tree_degree_sequence(seq)})


@main.command("tree-interval")
@seq_option
def tree_interval(seq: DegreeSequence) -> None:
    """Print the smallest and largest matching number of trees with degrees SEQ"""
    if seq.values == (1, 1):
        emit({"nu_min": 1, "nu_max": 1})
        return
    with usage_errors():
        interval = matching_interval_tree(seq)
    emit({"nu_min": interval.nu_min, "nu_max": interval.nu_max})


@main.command("tree-realize")
@seq_option
@click.option("--nu", type=int, required=True, help="Matching number of the tree")
@format_option
def tree_realize(seq: DegreeSequence, nu: int, output_format: str) -> None:
    """Construct a tree with degrees SEQ and matching number NU"""
    if seq.values == (1, 1) and nu == 1:
        t = LabeledTree(2, [(1, 2)])
    else:
        with usage_errors():
            t = realize_tree_with_nu(seq, nu)
    if output_format == "edges":
        for u, v in t.sorted_edges():
            click.echo(f"v{u} v{v}")
    else:
        emit(tree_json(t, nu))


@main.command("bip-check")
@a_option
@b_option
def bip_check(a: DegreeSequence, b: DegreeSequence) -> None:
    """Decide whether (A, B) is a bipartite degree sequence"""
    dd = BipartiteDegreeSequence(a, b)
    emit({"graphical": gale_ryser_check(dd), "violated_k": gale_ryser_violation(dd)})


@main.command("bip-interval")
@a_option
@b_option
@click.option("--linear/--binary", default=False, help="Test every matching number instead of bisecting")
def bip_interval(a: DegreeSequence, b: DegreeSequence, *, linear: bool) -> None:
    """Print the achievable matching numbers of (A, B)"""
    with usage_errors():
        interval = matching_interval_bipartite(BipartiteDegreeSequence(a, b), linear=linear)
    emit({"empty": interval.empty, "nu_min": interval.nu_min, "nu_max": interval.nu_max})


@main.command("bip-realize")
@a_option
@b_option
@click.option("--nu", type=int, required=True, help="Matching number of the realization")
@click.option(
    "--method",
    type=click.Choice(["flow", "swap"]),
    default="flow",
    help="Find the realization by max flow or along a swap walk (default: flow)",
)
@format_option
def bip_realize(a: DegreeSequence, b: DegreeSequence, nu: int, method: str, output_format: str) -> None:
    """Construct a realization of (A, B) with matching number NU"""
    dd = BipartiteDegreeSequence(a, b)
    k: int | None = None
    with usage_errors():
        if method == "swap":
            g = interpolate_nu(dd, nu)
        else:
            result = find_realization(dd, nu)
            if not isinstance(result, Realization):
                if output_format == "edges":
                    click.echo(f"infeasible: {result.reason}", err=True)
                else:
                    emit(
                        {
                            "feasible": False,
                            "nu": nu,
                            "reason": result.reason,
                            "target": result.target,
                            "flow_values": list(result.flow_values),
                        },
                    )
                return
            g, k = result
    if output_format == "edges":
        for i, j in g.sorted_edges():
            click.echo(f"v{i} w{j}")
    else:
        emit({"feasible": True, "nu": nu, "k": k, **graph_json(g)})


@main.command("bip-interpolate")
@a_option
@b_option
def bip_interpolate(a: DegreeSequence, b: DegreeSequence) -> None:
    """Walk by swaps between realizations of (A, B) with the smallest and largest matching number"""
    dd = BipartiteDegreeSequence(a, b)
    with usage_errors():
        walk = swap_walk(dd)
    emit(
        {
            "walk": [
                {
                    "step": None if entry.step is None else list(entry.step),
                    "nu": entry.nu,
                    "edges": [list(e) for e in entry.graph.sorted_edges()],
                }
                for entry in walk
            ],
        },
    )


@main.command("swap-path")
@click.argument("source", type=click.File("r"))
@click.argument("destination", type=click.File("r"))
@click.option("--n", "n", type=int, default=None, help="Number of A-vertices (default: largest index used)")
@click.option("--m", "m", type=int, default=None, help="Number of B-vertices (default: largest index used)")
def swap_path_command(source: TextIO, destination: TextIO, n: int | None, m: int | None) -> None:
    """Print swaps turning the graph in SOURCE into the graph in DESTINATION

    Both files hold one edge per line, written ``v<i> w<j>``.
    """
    g1 = parse_edge_list(source, n, m)
    g2 = parse_edge_list(destination, n, m)
    if (g1.n, g1.m) != (g2.n, g2.m):
        raise click.UsageError(f"vertex counts differ: {g1.n}x{g1.m} and {g2.n}x{g2.m}; use --n and --m")
    with usage_errors():
        steps = swap_path(g1, g2)
    emit({"steps": [list(step) for step in steps]})


@main.command("verify")
@click.option("--max-n", default=4, show_default=True, help="Largest A side in the bipartite sweep")
@click.option("--max-m", default=4, show_default=True, help="Largest B side in the bipartite sweep")
@click.option("--max-deg", default=3, show_default=True, help="Largest degree in the bipartite sweep")
@click.option("--max-tree-n", default=9, show_default=True, help="Largest tree in the tree sweep")
def verify(max_n: int, max_m: int, max_deg: int, max_tree_n: int) -> None:
    """Cross-check every result against exhaustive enumeration on small instances"""
    with usage_errors():
        trees = sweep_trees(max_tree_n)
        click.echo(f"trees: {trees.instances} sequences, {trees.checks} checks", err=True)
        bipartite = sweep_bipartite(max_n, max_m, max_deg)
        click.echo(f"bipartite: {bipartite.instances} sequences, {bipartite.checks} checks", err=True)
    emit({"trees": report_json(trees), "bipartite": report_json(bipartite)})
    for report in (trees, bipartite):
        if report.counterexample is not None:
            click.echo(f"counterexample: {report.counterexample}", err=True)
    if not (trees.passed and bipartite.passed):
        sys.exit(1)


if __name__ == "__main__":
    main()
