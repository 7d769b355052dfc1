from __future__ import annotations

import logging
from typing import Any

from tradeoff_sssp.core.graph import Digraph, contract_into_source
from tradeoff_sssp.core.nearest import t_nearest_from
from tradeoff_sssp.core.ports.observer import DiscoveryObserver
from tradeoff_sssp.core.result import DiscoveryStep, RunParameters, SsspResult, tight_parents
from tradeoff_sssp.core.runtime import Runtime, get_runtime
from tradeoff_sssp.core.weights import InvalidParameter

logger = logging.getLogger(__name__)


def basic_sssp(
    g: Digraph,
    t: int,
    runtime: Runtime | None = None,
    observer: DiscoveryObserver | None = None,
) -> SsspResult:
    """Repeat t-nearest discovery and contraction until nothing new is reachable.

    Each step finds the ``t`` closest remaining vertices on the current graph,
    whose weight-ordered adjacency already is the top-``t`` filter, records
    their distances and contracts them into the source. The input graph is not
    modified.
    """
    if t < 1:
        raise InvalidParameter(f"t must be at least 1, got {t}")
    runtime = runtime or get_runtime()
    start = runtime.counters
    current = g.copy()
    dist: dict[int, Any] = {g.source: g.kind.zero()}
    steps = 0

    while current.n > 1:
        found = t_nearest_from(current, current.source, t, runtime)
        if not found:
            logger.debug("Discovery exhausted with %d vertices unreachable", current.n - 1)
            break
        discovered = dict(found)
        dist.update(discovered)
        if observer is not None:
            observer(DiscoveryStep(index=steps, graph=current, discovered=discovered))
        contract_into_source(current, discovered, discovered, runtime)
        steps += 1

    parent = tight_parents(g, dist, runtime)
    logger.info("basic_sssp: n=%d t=%d steps=%d reached=%d", g.n, t, steps, len(dist))
    return SsspResult(
        source=g.source,
        dist=dist,
        parent=parent,
        counters=runtime.counters - start,
        steps=steps,
        params=RunParameters(t=t),
    )
