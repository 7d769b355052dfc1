"""Phased SSSP for dense graphs.

Instead of splitting vertices, the dense variant keeps a degree-bounded alive
subgraph ``G0`` for the whole run. Each phase computes near-lists on ``G0``
with the permanently heavy vertices seeded as heavy, extends every light list
by one alive hop (the improved near-lists), and then runs up to ``ell``
discovery steps on candidate subgraphs built from the improved lists.
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from tradeoff_sssp.core.alive import AliveState, init_alive, update_alive
from tradeoff_sssp.core.basic import basic_sssp
from tradeoff_sssp.core.graph import Digraph, contract_into_source
from tradeoff_sssp.core.nearest import t_nearest_from
from tradeoff_sssp.core.nearlists import NearListTable, compute_near_lists
from tradeoff_sssp.core.ports.observer import DiscoveryObserver
from tradeoff_sssp.core.result import DiscoveryStep, RunParameters, SsspResult, tight_parents
from tradeoff_sssp.core.runtime import Runtime, get_runtime
from tradeoff_sssp.core.sparse import PhaseState, build_candidate_subgraph
from tradeoff_sssp.core.weights import InvalidParameter, InvariantBreach

logger = logging.getLogger(__name__)

Schedule = Callable[[int, int], tuple[int, int]]
AliveHook = Callable[[AliveState], None]


def _schedule(n: int, t: int, exponent: float) -> tuple[int, int]:
    ell = min(max(1, n // t), max(t, math.ceil(n ** (1 / 5) / t**exponent)))
    p = min(max(1, n), max(1, round((n / ell) ** (1 / 4))))
    return ell, p


def dense_schedule(n: int, t: int) -> tuple[int, int]:
    """``ell = n^(1/5) / t^(12/5)`` and ``p = (n / ell)^(1/4)``, clamped."""
    return _schedule(n, t, 12 / 5)


def exotic_schedule(n: int, t: int) -> tuple[int, int]:
    """The shorter phases used when weights are persistent trees."""
    return _schedule(n, t, 16 / 5)


def clamp_t(n: int, t: int) -> int:
    return min(max(1, t), max(1, n - 1))


@dataclass
class ImprovedNearListTable(NearListTable):
    base: NearListTable | None = field(default=None, repr=False)


def dense_near_lists(state: AliveState, t: int, p: int, runtime: Runtime | None = None) -> NearListTable:
    """Near-lists on ``G0`` with ``Z0 + {s}`` as the initial heavy set."""
    g0 = state.alive
    s = g0.source
    for v in g0.vertices:
        if v == s:
            continue
        if g0.outdeg(v) > 3 * t:
            raise InvariantBreach(f"Alive out-degree of {v} is {g0.outdeg(v)} > 3t = {3 * t}")
        if state.alive_indeg(v) > p:
            raise InvariantBreach(f"Alive in-degree of {v} is {state.alive_indeg(v)} > p = {p}")
    table = compute_near_lists(g0, t, p, initial_heavy=state.permanent | {s}, runtime=runtime)
    logger.debug("Dense near-lists: |Z0|=%d |Z|=%d", len(state.permanent), len(table.heavy))
    return table


def improve_near_lists(
    table: NearListTable,
    state: AliveState,
    t: int,
    runtime: Runtime | None = None,
) -> ImprovedNearListTable:
    runtime = runtime or get_runtime()
    g0 = state.alive
    kind = g0.kind
    heavy = table.heavy
    vertices = sorted(table.lists)

    def improve(u: int) -> list[tuple[int, Any]]:
        own = table.lists[u]
        if u in heavy:
            return list(own)
        best: dict[int, Any] = {}
        for v, d in own:
            best[v] = d
        for v, d in own:
            if not g0.has_vertex(v):
                continue
            for y, weight in g0.out_edges(v):
                candidate = kind.add_edge_batch(d, [weight])
                held = best.get(y)
                if held is None or candidate < held:
                    best[y] = candidate
        ranked = sorted(best.items(), key=lambda item: item[1])
        return ranked[: t + 1]

    def candidate_count(u: int) -> int:
        return sum(g0.outdeg(v) + 1 for v, _ in table.lists[u] if g0.has_vertex(v))

    improved = runtime.par_map(vertices, improve, cost=candidate_count)
    lists = dict(zip(vertices, improved))
    inverse: dict[int, set[int]] = defaultdict(set)
    appearances: dict[int, int] = dict.fromkeys(vertices, 0)
    for u, entries in lists.items():
        for v, _ in entries:
            inverse[v].add(u)
            if v != u:
                appearances[v] = appearances.get(v, 0) + 1
    runtime.charge(work=sum(len(entries) for entries in lists.values()), depth=1)
    return ImprovedNearListTable(
        t=t,
        p=table.p,
        lists=lists,
        inverse=dict(inverse),
        appearances=appearances,
        heavy=set(heavy),
        initial_heavy=table.initial_heavy,
        base=table,
    )


def dense_sssp(
    g: Digraph,
    t: int,
    runtime: Runtime | None = None,
    observer: DiscoveryObserver | None = None,
    schedule: Schedule = dense_schedule,
    on_alive: AliveHook | None = None,
) -> SsspResult:
    """Exact SSSP with the alive-subgraph phases.

    ``on_alive`` sees the alive state after initialization and after every
    contraction. When the clamped phase length drops below ``t`` the run falls
    back to :func:`basic_sssp`.
    """
    if t < 1:
        raise InvalidParameter(f"t must be at least 1, got {t}")
    runtime = runtime or get_runtime()
    clamped = clamp_t(g.n, t)
    if clamped != t:
        logger.debug("dense_sssp: t=%d clamped to %d for n=%d", t, clamped, g.n)
        t = clamped
    ell, p = schedule(g.n, t)
    if ell < t:
        logger.debug("dense_sssp: ell=%d < t=%d for n=%d, falling back to basic_sssp", ell, t, g.n)
        fallback = basic_sssp(g, t, runtime, observer)
        return SsspResult(
            source=fallback.source,
            dist=fallback.dist,
            parent=fallback.parent,
            counters=fallback.counters,
            steps=fallback.steps,
            params=RunParameters(t=t, ell=ell, p=p),
        )

    start = runtime.counters
    logger.info("dense_sssp: n=%d m=%d t=%d ell=%d p=%d", g.n, g.m, t, ell, p)
    current = g.copy()
    dist: dict[int, Any] = {g.source: g.kind.zero()}
    state = init_alive(current, t, p, runtime)
    if on_alive is not None:
        on_alive(state)

    steps = 0
    phases = 0
    exhausted = False
    while current.n > 1 and not exhausted:
        table = dense_near_lists(state, t, p, runtime)
        improved = improve_near_lists(table, state, t, runtime)
        phase = PhaseState(current)
        phases += 1
        for _ in range(ell):
            if current.n <= 1:
                break
            h = build_candidate_subgraph(phase, improved, t, runtime)
            found = t_nearest_from(h, current.source, t, runtime)
            if not found:
                exhausted = True
                break
            discovered = dict(found)
            dist.update(discovered)
            if observer is not None:
                observer(DiscoveryStep(index=steps, graph=current, discovered=discovered, candidate=h))
            contract_into_source(current, discovered, discovered, runtime)
            update_alive(state, discovered, runtime)
            if on_alive is not None:
                on_alive(state)
            phase.discovered |= discovered.keys()
            steps += 1

    logger.info(
        "dense_sssp: %d phases, %d steps, %d refill steps (%d non-concluding)",
        phases,
        steps,
        state.refill_steps,
        state.non_concluding,
    )
    parent = tight_parents(g, dist, runtime)
    return SsspResult(
        source=g.source,
        dist=dist,
        parent=parent,
        counters=runtime.counters - start,
        steps=steps,
        params=RunParameters(t=t, ell=ell, p=p),
    )
