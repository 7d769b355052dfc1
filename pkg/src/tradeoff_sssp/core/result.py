from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from tradeoff_sssp.core.graph import Digraph, GraphView
from tradeoff_sssp.core.runtime import Counters, Runtime
from tradeoff_sssp.core.weights import INFINITY, InvariantBreach


@dataclass(frozen=True)
class RunParameters:
    t: int
    ell: int = 0
    p: int = 0


@dataclass(frozen=True)
class DiscoveryStep:
    """One discovery step as seen by an observer, before the contraction is applied."""

    index: int
    graph: Digraph
    discovered: dict[int, Any]
    candidate: GraphView | None = None


@dataclass(frozen=True)
class SsspResult:
    source: int
    dist: dict[int, Any]
    parent: dict[int, int]
    counters: Counters
    steps: int
    params: RunParameters = field(default_factory=lambda: RunParameters(t=1))

    def distance(self, v: int) -> Any:
        return self.dist.get(v, INFINITY)

    def reached(self, v: int) -> bool:
        return v in self.dist

    def path_to(self, v: int) -> list[int]:
        if v not in self.dist:
            return []
        path = [v]
        while path[-1] != self.source:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path


def tight_parents(g: Digraph, dist: Mapping[int, Any], runtime: Runtime) -> dict[int, int]:
    """Pick, for every reached vertex, an in-edge that is tight under ``dist``."""
    targets = [v for v in sorted(dist) if v != g.source]

    def pick(v: int) -> int:
        for tail, weight in g.in_edges(v):
            if tail in dist and g.kind.add_edge_batch(dist[tail], [weight]) == dist[v]:
                return tail
        raise InvariantBreach(f"No tight in-edge for vertex {v}")

    parents = runtime.par_map(targets, pick, cost=lambda v: g.indeg(v) + 1)
    return dict(zip(targets, parents))
