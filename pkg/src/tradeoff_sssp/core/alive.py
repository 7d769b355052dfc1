"""Permanently heavy vertices and the alive subgraph.

``G0`` keeps, for every vertex, a prefix of its out-edges by weight, with at
most ``3t`` edges out and at most ``p`` edges in (edges leaving the source are
not counted on the in-side). A vertex that would receive more than ``p`` alive
in-edges takes only its remaining slack and becomes permanently heavy (``Z0``).
Pending out-edges that were not considered yet wait in ``P_v``.

The source is special: its alive out-edges are exactly its ``t`` lightest
edges in ``G``, recomputed after every contraction.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable
from typing import Any

from sortedcontainers import SortedList

from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.runtime import Runtime, get_runtime

logger = logging.getLogger(__name__)


class AliveState:
    def __init__(self, graph: Digraph, t: int, p: int) -> None:
        self.graph = graph
        self.t = t
        self.p = p
        self.initial_n = graph.n
        self.permanent: set[int] = set()
        self.alive = Digraph(graph.kind, graph.source, graph.vertices)
        self.pending: dict[int, SortedList] = {}
        self._pending_tails: dict[int, set[int]] = defaultdict(set)
        self.refill_steps = 0
        self.non_concluding = 0

    @property
    def source(self) -> int:
        return self.graph.source

    def alive_indeg(self, v: int) -> int:
        """In-degree in ``G0`` ignoring edges out of the source."""
        return sum(1 for tail, _ in self.alive.in_edges(v) if tail != self.source)

    def _needy(self) -> list[int]:
        return [
            v
            for v in self.alive.vertices
            if v != self.source and self.alive.outdeg(v) < self.t and self.pending.get(v)
        ]

    def _purge_pending_head(self, head: int) -> None:
        for tail in self._pending_tails.pop(head, set()):
            queue = self.pending.get(tail)
            if queue is None:
                continue
            weight = self.graph.weight(tail, head)
            if weight is not None and (weight, head) in queue:
                queue.remove((weight, head))

    def _discard_pending(self, tail: int, weight: Any, head: int) -> None:
        queue = self.pending.get(tail)
        if queue is not None and (weight, head) in queue:
            queue.remove((weight, head))
        tails = self._pending_tails.get(head)
        if tails is not None:
            tails.discard(tail)

    def refill_step(self, runtime: Runtime) -> bool:
        """One refill step; returns ``False`` when no vertex needs edges."""
        needy = self._needy()
        if not needy:
            return False
        window = 2 * self.t
        considered = runtime.par_map(
            needy,
            lambda v: list(self.pending[v][:window]),
            cost=lambda v: min(window, len(self.pending[v])),
        )

        by_head: dict[int, list[tuple[int, Any]]] = defaultdict(list)
        for tail, batch in zip(needy, considered):
            for weight, head in batch:
                by_head[head].append((tail, weight))

        added = 0
        for head in sorted(by_head):
            offers = sorted(by_head[head], key=lambda offer: offer[0])
            indeg = self.alive_indeg(head)
            if indeg + len(offers) > self.p:
                take = offers[: max(0, self.p - indeg)]
                self.permanent.add(head)
                self._purge_pending_head(head)
            else:
                take = offers
            for tail, weight in take:
                self.alive.add_edge(tail, head, weight)
                added += 1

        for tail, batch in zip(needy, considered):
            for weight, head in batch:
                self._discard_pending(tail, weight, head)

        runtime.charge_batch(added + sum(len(batch) for batch in considered), self.graph.n)
        self.refill_steps += 1
        return True

    def refill(self, runtime: Runtime) -> int:
        steps = 0
        while self.refill_step(runtime):
            steps += 1
        self.non_concluding += max(0, steps - 1)
        return steps

    def reset_source_edges(self, runtime: Runtime) -> None:
        s = self.source
        for head, _ in self.alive.out_edges(s):
            self.alive.remove_edge(s, head)
        top = self.graph.top_t_edges(s, self.t)
        for edge in top:
            self.alive.add_edge(s, edge.head, edge.weight)
        runtime.charge_batch(len(top), self.graph.n)

    def remove(self, gone: Iterable[int]) -> None:
        for v in sorted(set(gone)):
            self.permanent.discard(v)
            if self.alive.has_vertex(v):
                self.alive.remove_vertex(v)
            queue = self.pending.pop(v, None)
            if queue is not None:
                for _, head in queue:
                    tails = self._pending_tails.get(head)
                    if tails is not None:
                        tails.discard(v)
            for tail in self._pending_tails.pop(v, set()):
                pending = self.pending.get(tail)
                if pending is None:
                    continue
                stale = [entry for entry in pending if entry[1] == v]
                for entry in stale:
                    pending.remove(entry)


def init_alive(g: Digraph, t: int, p: int, runtime: Runtime | None = None) -> AliveState:
    runtime = runtime or get_runtime()
    state = AliveState(g, t, p)
    for v in g.vertices:
        if v == g.source:
            continue
        state.pending[v] = SortedList(g.out_by_weight(v))
        for _, head in state.pending[v]:
            state._pending_tails[head].add(v)
    runtime.charge(work=g.m + g.n, depth=1)
    state.reset_source_edges(runtime)
    steps = state.refill(runtime)
    logger.debug("init_alive: %d refill steps, |Z0|=%d, |E0|=%d", steps, len(state.permanent), state.alive.m)
    return state


def update_alive(state: AliveState, contracted: Iterable[int], runtime: Runtime | None = None) -> None:
    """Bring the alive state in line with a contraction already applied to ``state.graph``."""
    runtime = runtime or get_runtime()
    state.remove(contracted)
    state.reset_source_edges(runtime)
    state.refill(runtime)
