"""Phased SSSP for sparse graphs.

The graph is first split to constant degree. The first phase computes the
near-lists and every later phase refreshes the lists that met the vertices
contracted since. A phase runs up to ``ell`` discovery steps; a step only
looks at the candidate subgraph ``H = G_t[Z* | B | Y]`` built from the near-lists,
which is guaranteed to contain the next ``t`` closest vertices with exact distances.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Protocol

from tradeoff_sssp.core.graph import (
    Digraph,
    TopTView,
    contract_into_source,
    distances_from_split,
    split_constant_degree,
)
from tradeoff_sssp.core.nearest import t_nearest_from
from tradeoff_sssp.core.nearlists import preprocess_near_lists, refresh_near_lists
from tradeoff_sssp.core.ports.observer import DiscoveryObserver
from tradeoff_sssp.core.result import DiscoveryStep, RunParameters, SsspResult, tight_parents
from tradeoff_sssp.core.runtime import Runtime, get_runtime
from tradeoff_sssp.core.weights import InvalidParameter

logger = logging.getLogger(__name__)


class NearLists(Protocol):
    lists: dict[int, list[tuple[int, Any]]]
    inverse: dict[int, set[int]]
    heavy: set[int]


@dataclass
class PhaseState:
    graph: Digraph
    discovered: set[int] = field(default_factory=set)

    def heavy_star(self, table: NearLists) -> set[int]:
        """``Z* = Z - U`` restricted to the current graph; always holds the source."""
        return {z for z in table.heavy if z not in self.discovered and self.graph.has_vertex(z)} | {self.graph.source}

    def stale(self, table: NearLists) -> set[int]:
        """``B``: current vertices whose near-list meets the discovered set."""
        touched: set[int] = set()
        for x in self.discovered:
            touched |= table.inverse.get(x, set())
        return {u for u in touched if self.graph.has_vertex(u)}


def sparse_schedule(n: int, t: int) -> tuple[int, int]:
    """Phase length and heavy threshold, clamped into their valid ranges."""
    upper = max(1, n // t)
    ell = max(1, min(upper, max(t, math.ceil(n ** (1 / 3) / t**2))))
    p = min(max(2, n), max(2, round(math.sqrt(n / ell))))
    return ell, p


def build_candidate_subgraph(
    state: PhaseState, table: NearLists, t: int, runtime: Runtime | None = None
) -> TopTView:
    """``H`` as a view over the phase graph; read it before the next contraction."""
    g = state.graph
    z_star = state.heavy_star(table)
    stale = state.stale(table)
    core = z_star | stale
    extra: set[int] = set()
    for b in sorted(core):
        for edge in g.top_t_edges(b, t):
            if edge.head in core:
                continue
            for y, _ in table.lists.get(edge.head, []):
                if g.has_vertex(y):
                    extra.add(y)
    h = TopTView(g, core | extra, t)
    if runtime is not None:
        runtime.charge(work=len(core) * (t + 1) ** 2, depth=1)
        runtime.charge_batch(h.n * t, g.n)
    return h


def sparse_sssp(
    g: Digraph,
    t: int,
    runtime: Runtime | None = None,
    observer: DiscoveryObserver | None = None,
) -> SsspResult:
    if t < 1:
        raise InvalidParameter(f"t must be at least 1, got {t}")
    runtime = runtime or get_runtime()
    start = runtime.counters

    current, mapping = split_constant_degree(g)
    ell, p = sparse_schedule(current.n, t)
    logger.info("sparse_sssp: n=%d split_n=%d t=%d ell=%d p=%d", g.n, current.n, t, ell, p)

    split_dist: dict[int, Any] = {current.source: current.kind.zero()}
    steps = 0
    exhausted = False
    table = preprocess_near_lists(current, t, p, runtime)
    state = PhaseState(current)
    while current.n > 1 and not exhausted:
        if state.discovered:
            table = refresh_near_lists(current, table, state.discovered, runtime)
            state = PhaseState(current)
        for _ in range(ell):
            if current.n <= 1:
                break
            h = build_candidate_subgraph(state, table, t, runtime)
            found = t_nearest_from(h, current.source, t, runtime)
            if not found:
                exhausted = True
                break
            discovered = dict(found)
            split_dist.update(discovered)
            if observer is not None:
                observer(DiscoveryStep(index=steps, graph=current, discovered=discovered, candidate=h))
            contract_into_source(current, discovered, discovered, runtime)
            state.discovered |= discovered.keys()
            steps += 1

    dist = distances_from_split(split_dist, mapping)
    parent = tight_parents(g, dist, runtime)
    return SsspResult(
        source=g.source,
        dist=dist,
        parent=parent,
        counters=runtime.counters - start,
        steps=steps,
        params=RunParameters(t=t, ell=ell, p=p),
    )
