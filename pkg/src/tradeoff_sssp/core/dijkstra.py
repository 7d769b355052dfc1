"""Sequential Dijkstra, the reference every parallel algorithm is checked against."""

from __future__ import annotations

import heapq
import itertools
from collections.abc import Callable, Iterable
from typing import Any, TypeVar

from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.result import RunParameters, SsspResult, tight_parents
from tradeoff_sssp.core.runtime import Runtime, get_runtime

E = TypeVar("E")


def shortest_distances(
    source: int,
    neighbors: Callable[[int], Iterable[tuple[int, Any, E]]],
    zero: Any,
) -> tuple[dict[int, Any], dict[int, E]]:
    """Label-setting search from ``source``.

    ``neighbors(v)`` yields ``(head, weight, label)``; the label of the edge that
    last improved a vertex is reported as its parent.
    """
    dist: dict[int, Any] = {}
    parent: dict[int, E] = {}
    best: dict[int, Any] = {source: zero}
    tie = itertools.count()
    heap: list[tuple[Any, int, int]] = [(zero, next(tie), source)]
    while heap:
        d, _, v = heapq.heappop(heap)
        if v in dist:
            continue
        dist[v] = d
        for head, weight, label in neighbors(v):
            if head in dist:
                continue
            candidate = d + weight
            held = best.get(head)
            if held is None or candidate < held:
                best[head] = candidate
                parent[head] = label
                heapq.heappush(heap, (candidate, next(tie), head))
    return dist, parent


def dijkstra_sssp(g: Digraph, runtime: Runtime | None = None) -> SsspResult:
    runtime = runtime or get_runtime()
    start = runtime.counters

    def neighbors(v: int) -> list[tuple[int, Any, int]]:
        return [(head, weight, v) for head, weight in g.out_edges(v)]

    dist, _ = shortest_distances(g.source, neighbors, g.kind.zero())
    runtime.charge(work=g.m + g.n, depth=len(dist))
    parent = tight_parents(g, dist, runtime)
    return SsspResult(
        source=g.source,
        dist=dist,
        parent=parent,
        counters=runtime.counters - start,
        steps=len(dist) - 1,
        params=RunParameters(t=1),
    )
