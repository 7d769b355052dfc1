"""The t-nearest kernel: every vertex learns its ``t`` closest vertices by doubling.

Round ``i`` holds, for each ``u``, the ``t + 1`` vertices with the lightest paths
of at most ``2^i`` hops (``u`` itself included at distance zero). A round joins
each list with the lists of its members, keeps the minimum per vertex and cuts
back to ``t + 1`` entries. ``ceil(log2 n)`` rounds cover every simple path.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from tradeoff_sssp.core.graph import Digraph, GraphView, UnknownVertex, induced_top_t
from tradeoff_sssp.core.runtime import Runtime, ceil_log2, get_runtime
from tradeoff_sssp.core.weights import InvalidParameter

logger = logging.getLogger(__name__)

# all_t_nearest does at most NEAREST_WORK_CONSTANT * n * t^2 * ceil(log2 n)^2 work
# and at most NEAREST_DEPTH_CONSTANT * ceil(log2 n)^2 depth for n >= 2.
NEAREST_WORK_CONSTANT = 16
NEAREST_DEPTH_CONSTANT = 3


@dataclass(frozen=True)
class NearEntry:
    vertex: int
    dist: Any
    via: int | None = None


@dataclass(frozen=True)
class NearTable:
    t: int
    rounds: int
    entries: dict[int, list[NearEntry]]

    def near(self, u: int) -> list[NearEntry]:
        """The entries of ``u`` other than ``u`` itself, lightest first."""
        return [entry for entry in self.entries[u] if entry.vertex != u]

    def dist(self, u: int, v: int) -> Any | None:
        for entry in self.entries[u]:
            if entry.vertex == v:
                return entry.dist
        return None


def _base_entries(g: Digraph, u: int, t: int) -> list[NearEntry]:
    entries = [NearEntry(u, g.kind.zero())]
    entries.extend(NearEntry(edge.head, edge.weight, u) for edge in g.top_t_edges(u, t))
    return entries


def _keep_lightest(candidates: list[NearEntry], t: int) -> list[NearEntry]:
    best: dict[int, NearEntry] = {}
    for entry in candidates:
        held = best.get(entry.vertex)
        if held is None or entry.dist < held.dist:
            best[entry.vertex] = entry
    return sorted(best.values(), key=lambda entry: entry.dist)[: t + 1]


def doubling_round(
    g: Digraph,
    table: dict[int, list[NearEntry]],
    t: int,
    runtime: Runtime,
) -> dict[int, list[NearEntry]]:
    """One squaring step: ``d^{i+1}(u, y) = min_v d^i(u, v) + d^i(v, y)`` over the kept lists."""
    vertices = list(table)

    def join(u: int) -> list[NearEntry]:
        candidates: list[NearEntry] = []
        for first in table[u]:
            for second in table[first.vertex]:
                via = first.vertex if second.vertex != first.vertex else first.via
                if first.vertex == u:
                    via = second.via
                candidates.append(NearEntry(second.vertex, first.dist + second.dist, via))
        return candidates

    def pair_count(u: int) -> int:
        return sum(len(table[entry.vertex]) for entry in table[u])

    joined = runtime.par_map(vertices, join, cost=pair_count)
    g.kind.prepare([[entry.dist for entry in group] for group in joined])
    kept = runtime.par_map(
        list(range(len(vertices))),
        lambda i: _keep_lightest(joined[i], t),
        cost=lambda i: len(joined[i]),
    )
    return dict(zip(vertices, kept))


def _doubling(g: Digraph, t: int, rounds: int, runtime: Runtime) -> dict[int, list[NearEntry]]:
    vertices = g.vertices
    base = runtime.par_map(vertices, lambda u: _base_entries(g, u, t), cost=lambda u: min(t, g.outdeg(u)) + 1)
    entries = dict(zip(vertices, base))
    for _ in range(rounds):
        entries = doubling_round(g, entries, t, runtime)
    return entries


def all_t_nearest(g: Digraph, t: int, runtime: Runtime | None = None) -> NearTable:
    if t < 1:
        raise InvalidParameter(f"t must be at least 1, got {t}")
    runtime = runtime or get_runtime()
    rounds = ceil_log2(g.n) if g.n >= 2 else 0
    entries = _doubling(g, t, rounds, runtime)
    logger.debug("t-nearest on %d vertices with t=%d took %d rounds", g.n, t, rounds)
    return NearTable(t=t, rounds=rounds, entries=entries)


def hop_ball(h: GraphView, s: int, t: int) -> set[int]:
    """Vertices within ``t`` hops of ``s`` along top-``t`` edges."""
    ball = {s}
    frontier = [s]
    for _ in range(t):
        reached: list[int] = []
        for v in frontier:
            for edge in h.top_t_edges(v, t):
                if edge.head not in ball:
                    ball.add(edge.head)
                    reached.append(edge.head)
        if not reached:
            break
        frontier = reached
    return ball


def t_nearest_from(h: GraphView, s: int, t: int, runtime: Runtime | None = None) -> list[tuple[int, Any]]:
    """The ``t`` closest vertices to ``s`` in ``h`` (fewer if fewer are reachable).

    Each of the ``t`` closest vertices ends a shortest path of at most ``t``
    top-``t`` edges, so the doubling runs on that hop ball only. The number
    of rounds still follows ``h``.
    """
    if t < 1:
        raise InvalidParameter(f"t must be at least 1, got {t}")
    if not h.has_vertex(s):
        raise UnknownVertex(f"Vertex {s} is not in the graph")
    runtime = runtime or get_runtime()
    ball = hop_ball(h, s, t)
    runtime.charge(work=len(ball) * (t + 1), depth=1)
    local = induced_top_t(h, ball, t, runtime)
    rounds = ceil_log2(h.n) if h.n >= 2 else 0
    table = NearTable(t=t, rounds=rounds, entries=_doubling(local, t, rounds, runtime))
    return [(entry.vertex, entry.dist) for entry in table.near(s)]
