"""Incremental minimum cost-to-time ratio cycle.

The state keeps the minimum ratio ``lam*`` over all cycles, one cycle that
attains it, and a potential ``phi`` with ``c - lam* t - phi(u) + phi(v) >= 0`` on
every edge. Inserting ``p -> q`` only creates cycles through the new edge, so
the new optimum is ``min(lam_old, lam_pq)``. Deciding ``lam <= lam_new`` is one
non-negative shortest path query from ``q`` in the graph reweighted by ``phi``;
the exact ``lam_new`` comes from running an SSSP comparator on weights that
are linear in ``lam`` and settling its comparisons with that decision.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

import networkx as nx

from tradeoff_sssp.core.basic import basic_sssp
from tradeoff_sssp.core.dense import dense_sssp
from tradeoff_sssp.core.dijkstra import shortest_distances
from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.parametric import LinearKind, LinearWeight, ParametricResolver
from tradeoff_sssp.core.runtime import Runtime, get_runtime
from tradeoff_sssp.core.weights import InvalidParameter, InvariantBreach, as_fraction

logger = logging.getLogger(__name__)

Comparator = Literal["basic", "dense"]


@dataclass(frozen=True)
class RatioEdge:
    tail: int
    head: int
    cost: Fraction
    time: Fraction

    def __post_init__(self) -> None:
        if self.time <= 0:
            raise InvalidParameter(f"Edge {self.tail}->{self.head} needs a positive time, got {self.time}")


@dataclass(frozen=True)
class RatioState:
    n: int = 0
    edges: tuple[RatioEdge, ...] = ()
    ratio: Fraction | None = None
    cycle: tuple[RatioEdge, ...] | None = None
    potential: dict[int, Fraction] | None = field(default=None)

    @property
    def is_acyclic(self) -> bool:
        return self.ratio is None


def cycle_ratio(cycle: Sequence[RatioEdge]) -> Fraction:
    return sum((e.cost for e in cycle), Fraction(0)) / sum((e.time for e in cycle), Fraction(0))


def reduced_weight(edge: RatioEdge, lam: Fraction, phi: Mapping[int, Fraction]) -> Fraction:
    return edge.cost - lam * edge.time - phi[edge.tail] + phi[edge.head]


def attests(edges: Iterable[RatioEdge], phi: Mapping[int, Fraction], lam: Fraction) -> bool:
    return all(reduced_weight(edge, lam, phi) >= 0 for edge in edges)


def _topological_order(n: int, edges: Sequence[RatioEdge]) -> list[int]:
    dag: nx.DiGraph = nx.DiGraph()
    dag.add_nodes_from(range(n))
    dag.add_edges_from((e.tail, e.head) for e in edges)
    return list(nx.topological_sort(dag))


def dag_potential(n: int, edges: Sequence[RatioEdge], lam: Fraction) -> dict[int, Fraction]:
    """Longest paths under ``lam t - c``; attests every ``lam`` on an acyclic graph."""
    phi = dict.fromkeys(range(n), Fraction(0))
    incoming: dict[int, list[RatioEdge]] = {v: [] for v in range(n)}
    for edge in edges:
        incoming[edge.head].append(edge)
    for v in _topological_order(n, edges):
        for edge in incoming[v]:
            phi[v] = max(phi[v], phi[edge.tail] + lam * edge.time - edge.cost)
    return phi


def _potential_at(state: RatioState, lam: Fraction) -> dict[int, Fraction]:
    if state.potential is not None:
        return dict(state.potential)
    return dag_potential(state.n, state.edges, lam)


def _gamma(edge: RatioEdge, lam: Fraction, phi: Mapping[int, Fraction]) -> Fraction:
    return lam * edge.time - edge.cost + phi[edge.tail] - phi[edge.head]


def _reweighted_search(
    state: RatioState, source: int, lam: Fraction, phi: Mapping[int, Fraction]
) -> tuple[dict[int, Fraction], dict[int, RatioEdge]]:
    adjacency: dict[int, list[tuple[int, Fraction, RatioEdge]]] = {v: [] for v in range(state.n)}
    for edge in state.edges:
        weight = reduced_weight(edge, lam, phi)
        if weight < 0:
            raise InvariantBreach(f"Reweighted edge {edge.tail}->{edge.head} is negative ({weight}) at lam={lam}")
        adjacency[edge.tail].append((edge.head, weight, edge))
    return shortest_distances(source, adjacency.__getitem__, Fraction(0))


def test_lambda(state: RatioState, edge: RatioEdge, lam: Fraction) -> bool:
    """Whether ``lam <= lam_new`` once ``edge`` is inserted into ``state``."""
    if state.ratio is not None and lam > state.ratio:
        return False
    phi = _potential_at(state, lam)
    dist, _ = _reweighted_search(state, edge.head, lam, phi)
    reach = dist.get(edge.tail)
    if reach is None:
        return True
    return reach >= _gamma(edge, lam, phi)


test_lambda.__test__ = False  # type: ignore[attr-defined]


def _linear_dag_potential(state: RatioState, resolver: ParametricResolver) -> dict[int, tuple[Fraction, Fraction]]:
    """The DAG potential as ``a + b lam``, valid just above ``lam*``."""
    phi = {v: (Fraction(0), Fraction(0)) for v in range(state.n)}
    incoming: dict[int, list[RatioEdge]] = {v: [] for v in range(state.n)}
    for edge in state.edges:
        incoming[edge.head].append(edge)
    for v in _topological_order(state.n, state.edges):
        for edge in incoming[v]:
            a, b = phi[edge.tail]
            candidate = (a - edge.cost, b + edge.time)
            held = phi[v]
            if resolver.sign(candidate[0] - held[0], candidate[1] - held[1]) > 0:
                phi[v] = candidate
    return phi


def parametric_search(
    state: RatioState,
    edge: RatioEdge,
    comparator: Comparator = "basic",
    comparator_t: int = 1,
    runtime: Runtime | None = None,
) -> Fraction | None:
    """``lam_new = min(lam_old, lam_pq)`` exactly; ``None`` stands for no cycle at all."""
    runtime = runtime or get_runtime()
    n = max(state.n, edge.tail + 1, edge.head + 1)
    grown = RatioState(n, state.edges, state.ratio, state.cycle, _extend(state.potential, n))
    lam_old = grown.ratio

    reach: nx.DiGraph = nx.DiGraph()
    reach.add_nodes_from(range(n))
    reach.add_edges_from((e.tail, e.head) for e in grown.edges)
    if not nx.has_path(reach, edge.head, edge.tail):
        return lam_old
    if lam_old is not None and test_lambda(grown, edge, lam_old):
        return lam_old

    resolver = ParametricResolver(lambda lam: test_lambda(grown, edge, lam))
    if grown.potential is not None:
        phi = {v: (value, Fraction(0)) for v, value in grown.potential.items()}
    else:
        phi = _linear_dag_potential(grown, resolver)

    triples = [
        (e.tail, e.head, (e.cost - phi[e.tail][0] + phi[e.head][0], -e.time - phi[e.tail][1] + phi[e.head][1]))
        for e in grown.edges
    ]
    g = Digraph.from_edges(n, edge.head, triples, LinearKind(resolver))
    if comparator == "basic":
        result = basic_sssp(g, comparator_t, runtime)
    elif comparator == "dense":
        result = dense_sssp(g, comparator_t, runtime)
    else:
        raise InvalidParameter(f"Unknown comparator {comparator!r}; expected 'basic' or 'dense'")

    reached = result.dist.get(edge.tail)
    if reached is None:
        return lam_old
    assert isinstance(reached, LinearWeight)
    gamma_a = -edge.cost + phi[edge.tail][0] - phi[edge.head][0]
    gamma_b = edge.time + phi[edge.tail][1] - phi[edge.head][1]
    lam_pq = (gamma_a - reached.a) / (reached.b - gamma_b)
    logger.debug("Parametric search: lam_pq=%s after %d decisions", lam_pq, resolver.decisions)
    return lam_pq if lam_old is None or lam_pq < lam_old else lam_old


def _extend(potential: dict[int, Fraction] | None, n: int) -> dict[int, Fraction] | None:
    if potential is None:
        return None
    grown = dict(potential)
    for v in range(n):
        grown.setdefault(v, Fraction(0))
    return grown


def empty_state(n: int = 0) -> RatioState:
    return RatioState(n=n)


def insert_edge(
    state: RatioState,
    p: int,
    q: int,
    cost: Fraction | int | str,
    time: Fraction | int | str,
    comparator: Comparator = "basic",
    comparator_t: int = 1,
    runtime: Runtime | None = None,
) -> RatioState:
    if p < 0 or q < 0:
        raise InvalidParameter(f"Vertex ids must be non-negative, got {p}->{q}")
    edge = RatioEdge(p, q, as_fraction(cost), as_fraction(time))
    n = max(state.n, p + 1, q + 1)
    grown = RatioState(n, state.edges, state.ratio, state.cycle, _extend(state.potential, n))
    lam_new = parametric_search(grown, edge, comparator, comparator_t, runtime)
    edges = (*grown.edges, edge)
    if lam_new is None:
        logger.debug("Inserted %d->%d; graph still acyclic", p, q)
        return RatioState(n, edges)

    phi = _potential_at(grown, lam_new)
    dist, via = _reweighted_search(grown, q, lam_new, phi)

    cycle = grown.cycle
    if grown.ratio is None or lam_new < grown.ratio:
        path: list[RatioEdge] = []
        v = p
        while v != q:
            step = via[v]
            path.append(step)
            v = step.tail
        cycle = (edge, *reversed(path))
        if cycle_ratio(cycle) != lam_new:
            raise InvariantBreach(f"Witness cycle has ratio {cycle_ratio(cycle)}, expected {lam_new}")

    gamma = _gamma(edge, lam_new, phi)
    slack = max(
        [Fraction(0), gamma]
        + [dist[e.head] - reduced_weight(e, lam_new, phi) for e in grown.edges if e.tail not in dist and e.head in dist]
    )
    updated = {v: phi[v] - dist.get(v, slack) for v in range(n)}
    if not attests(edges, updated, lam_new):
        raise InvariantBreach(f"Updated potential does not attest lam={lam_new}")
    logger.debug("Inserted %d->%d; lam*=%s", p, q, lam_new)
    return RatioState(n, edges, lam_new, cycle, updated)
