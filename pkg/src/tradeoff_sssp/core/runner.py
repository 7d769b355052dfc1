"""Algorithm dispatch shared by the CLI commands."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass

from tradeoff_sssp.core.basic import basic_sssp
from tradeoff_sssp.core.dense import dense_sssp
from tradeoff_sssp.core.dijkstra import dijkstra_sssp
from tradeoff_sssp.core.exotic.sssp import (
    BinaryInstance,
    binary_sssp,
    build_binary_graph,
    lex_bottleneck_sssp,
    original_distances,
)
from tradeoff_sssp.core.generators import GraphInstance, to_digraph
from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.result import SsspResult
from tradeoff_sssp.core.runtime import Runtime
from tradeoff_sssp.core.sparse import sparse_sssp
from tradeoff_sssp.models import RunReport

logger = logging.getLogger(__name__)

Algorithm = Callable[[Digraph, int, Runtime], SsspResult]

ALGORITHMS: dict[str, dict[str, Algorithm]] = {
    "real": {
        "dijkstra": lambda g, t, runtime: dijkstra_sssp(g, runtime),
        "basic": lambda g, t, runtime: basic_sssp(g, t, runtime),
        "sparse": lambda g, t, runtime: sparse_sssp(g, t, runtime),
        "dense": lambda g, t, runtime: dense_sssp(g, t, runtime),
    },
    "lex": {
        "dijkstra": lambda g, t, runtime: dijkstra_sssp(g, runtime),
        "lex": lambda g, t, runtime: lex_bottleneck_sssp(g, t, runtime),
    },
    "bin": {
        "dijkstra": lambda g, t, runtime: dijkstra_sssp(g, runtime),
        "binary": lambda g, t, runtime: binary_sssp(g, t, runtime),
    },
}


class IncompatibleAlgorithm(ValueError):
    """Raised when an algorithm cannot run on a graph file of the given kind."""


@dataclass(frozen=True)
class PreparedGraph:
    instance: GraphInstance
    graph: Digraph
    binary: BinaryInstance | None = None


@dataclass(frozen=True)
class Outcome:
    report: RunReport
    distances: dict[int, str]


def prepare(instance: GraphInstance) -> PreparedGraph:
    if instance.kind == "bin":
        binary = build_binary_graph(instance.n, instance.source, instance.edges)
        return PreparedGraph(instance, binary.graph, binary)
    return PreparedGraph(instance, to_digraph(instance))


def resolve(algo: str, kind: str) -> Algorithm:
    choices = ALGORITHMS.get(kind)
    if choices is None:
        raise IncompatibleAlgorithm(f"Unknown weight kind {kind!r}")
    if algo not in choices:
        options = ", ".join(choices)
        raise IncompatibleAlgorithm(f"Algorithm {algo!r} does not run on {kind} graphs; use one of {options}")
    return choices[algo]


def render_distances(prepared: PreparedGraph, result: SsspResult) -> dict[int, str]:
    """Distances as written to a distances file: ``num den``, lex labels, or the ``2^w`` sum."""
    if prepared.binary is not None:
        return {v: str(value) for v, value in original_distances(prepared.binary, result).items()}
    kind = prepared.graph.kind
    return {v: kind.render(weight) for v, weight in result.dist.items()}


def execute(algo: str, prepared: PreparedGraph, t: int, runtime: Runtime) -> Outcome:
    """Run ``algo`` once and cross-check its distances against Dijkstra on the same graph."""
    algorithm = resolve(algo, prepared.instance.kind)
    started = time.perf_counter()
    result = algorithm(prepared.graph, t, runtime)
    elapsed = (time.perf_counter() - started) * 1000
    distances = render_distances(prepared, result)

    if algo == "dijkstra":
        oracle_ok = True
    else:
        oracle = dijkstra_sssp(prepared.graph, Runtime())
        oracle_ok = render_distances(prepared, oracle) == distances
        if not oracle_ok:
            logger.warning("%s distances disagree with dijkstra on n=%d", algo, prepared.graph.n)

    report = RunReport(
        algo=algo,
        n=prepared.instance.n,
        m=prepared.instance.m,
        t=result.params.t,
        ell=result.params.ell,
        p=result.params.p,
        work=result.counters.work,
        depth=result.counters.depth,
        steps=result.steps,
        oracle_ok=oracle_ok,
        ms=elapsed,
    )
    logger.info("%s: work=%d depth=%d steps=%d", algo, report.work, report.depth, report.steps)
    return Outcome(report=report, distances=distances)
