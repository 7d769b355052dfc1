"""Shared fixtures and sequential oracles for tests."""

import heapq
import itertools
import logging
from collections.abc import Callable, Iterable
from fractions import Fraction
from pathlib import Path
from typing import Any

import networkx as nx
import pytest

from tradeoff_sssp.core.alive import AliveState
from tradeoff_sssp.core.generators import GraphInstance, generate, to_digraph
from tradeoff_sssp.core.graph import Digraph, GraphView
from tradeoff_sssp.core.minratio import RatioEdge, cycle_ratio
from tradeoff_sssp.core.nearlists import NearListTable
from tradeoff_sssp.core.runtime import Runtime, SequentialBackend

logger = logging.getLogger(__name__)

_REPO_ROOT = Path(__file__).parent.parent

# s=0, a=1, b=2, c=3
STAR_EDGES: list[tuple[int, int, int]] = [(0, 1, 1), (0, 2, 4), (1, 2, 2), (2, 3, 1)]


# ---------------------------------------------------------------------------
# Auto-marker: tag tests as "unit" or "integration" based on directory
# ---------------------------------------------------------------------------


def pytest_collection_modifyitems(items: list[pytest.Item]) -> None:
    for item in items:
        test_path = Path(str(item.fspath))
        rel = test_path.relative_to(_REPO_ROOT / "tests")
        parts = rel.parts
        if parts and parts[0] == "integration":
            item.add_marker(pytest.mark.integration)
        else:
            item.add_marker(pytest.mark.unit)


# ---------------------------------------------------------------------------
# Oracles: plain sequential reimplementations
# ---------------------------------------------------------------------------


class Oracles:
    @staticmethod
    def distances(g: GraphView, removed: Iterable[int] = (), source: int | None = None) -> dict[int, Any]:
        """Plain Dijkstra on ``g`` minus ``removed``, from ``source`` (default: the graph's source)."""
        start = g.source if source is None else source
        skip = set(removed)
        zero = g.kind.zero()
        dist: dict[int, Any] = {}
        tie = itertools.count()
        heap: list[tuple[Any, int, int]] = [(zero, next(tie), start)]
        while heap:
            d, _, v = heapq.heappop(heap)
            if v in dist:
                continue
            dist[v] = d
            for head, weight in g.out_edges(v):
                if head not in dist and head not in skip:
                    heapq.heappush(heap, (g.kind.add_edge_batch(d, [weight]), next(tie), head))
        return dist

    @staticmethod
    def bellman_ford(g: Digraph, source: int) -> dict[int, Any]:
        dist: dict[int, Any] = {source: g.kind.zero()}
        for _ in range(max(0, g.n - 1)):
            changed = False
            for edge in g.edges():
                if edge.tail not in dist:
                    continue
                candidate = g.kind.add_edge_batch(dist[edge.tail], [edge.weight])
                held = dist.get(edge.head)
                if held is None or candidate < held:
                    dist[edge.head] = candidate
                    changed = True
            if not changed:
                break
        return dist

    @staticmethod
    def nearest(g: Digraph, u: int, t: int) -> list[tuple[int, Any]]:
        dist = Oracles.bellman_ford(g, u)
        ranked = sorted(((v, d) for v, d in dist.items() if v != u), key=lambda item: item[1])
        return ranked[:t]

    @staticmethod
    def hop_bounded(g: Digraph, u: int, hops: int) -> dict[int, Any]:
        """Lightest paths from ``u`` with at most ``hops`` edges, by direct recursion."""
        dist: dict[int, Any] = {u: g.kind.zero()}
        for _ in range(hops):
            step = dict(dist)
            for v, d in dist.items():
                for head, weight in g.out_edges(v):
                    candidate = g.kind.add_edge_batch(d, [weight])
                    held = step.get(head)
                    if held is None or candidate < held:
                        step[head] = candidate
            dist = step
        return dist

    @staticmethod
    def multiset_distances(n: int, source: int, edges: Iterable[tuple[int, int, int]]) -> dict[int, tuple[int, ...]]:
        """Dijkstra on descending label tuples, tie-broken by hop count and label delta."""
        adjacency: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        for tail, head, label in edges:
            if tail == head or head == source:
                continue
            held = adjacency[tail].get(head)
            if held is None or label < held:
                adjacency[tail][head] = label
        best: dict[int, tuple[tuple[int, ...], int, int]] = {}
        heap: list[tuple[tuple[int, ...], int, int, int]] = [((), 0, 0, source)]
        while heap:
            labels, hops, delta, v = heapq.heappop(heap)
            if v in best:
                continue
            best[v] = (labels, hops, delta)
            for head, label in adjacency[v].items():
                if head not in best:
                    merged = tuple(sorted((*labels, label), reverse=True))
                    heapq.heappush(heap, (merged, hops + 1, delta + head - v, head))
        return {v: value[0] for v, value in best.items()}

    @staticmethod
    def power_distances(n: int, source: int, edges: Iterable[tuple[int, int, int]]) -> dict[int, int]:
        """Dijkstra on ``2^w`` weights with Python integers."""
        adjacency: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        for tail, head, exponent in edges:
            if tail == head or head == source:
                continue
            held = adjacency[tail].get(head)
            if held is None or exponent < held:
                adjacency[tail][head] = exponent
        dist: dict[int, int] = {}
        heap: list[tuple[int, int]] = [(0, source)]
        while heap:
            d, v = heapq.heappop(heap)
            if v in dist:
                continue
            dist[v] = d
            for head, exponent in adjacency[v].items():
                if head not in dist:
                    heapq.heappush(heap, (d + (1 << exponent), head))
        return dist

    @staticmethod
    def minimum_ratio(edges: Iterable[RatioEdge]) -> Fraction | None:
        """Minimum cycle ratio of a multigraph with self-loops, by repeated negative-cycle search.

        While some cycle has ``c - lam t < 0`` its ratio is below ``lam``, so
        ``lam`` drops to that ratio until no such cycle is left.
        """
        edges = list(edges)
        best = min((cycle_ratio([e]) for e in edges if e.tail == e.head), default=None)
        others = [e for e in edges if e.tail != e.head]
        if not others or nx.is_directed_acyclic_graph(nx.DiGraph([(e.tail, e.head) for e in others])):
            return best
        lam = max(e.cost / e.time for e in others) + 1
        while True:
            cheapest: dict[tuple[int, int], RatioEdge] = {}
            for e in others:
                held = cheapest.get((e.tail, e.head))
                if held is None or e.cost - lam * e.time < held.cost - lam * held.time:
                    cheapest[(e.tail, e.head)] = e
            graph: nx.DiGraph = nx.DiGraph()
            graph.add_weighted_edges_from((tail, head, e.cost - lam * e.time) for (tail, head), e in cheapest.items())
            graph.add_weighted_edges_from((-1, v, Fraction(0)) for v in list(graph.nodes))
            try:
                cycle = nx.find_negative_cycle(graph, -1)
            except nx.NetworkXError:
                break
            lam = cycle_ratio([cheapest[(tail, head)] for tail, head in zip(cycle, cycle[1:])])
        return lam if best is None or lam < best else best


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


def appearance_bound(p: int, indeg: int) -> int:
    """Most lists a vertex with ``indeg`` non-source in-neighbours can sit in."""
    return (p - 1) * (indeg + 1)


def near_list_violations(g: Digraph, table: NearListTable, improved: bool = False) -> list[str]:
    """Check near-list sizes, appearance counts, path realism and domination against ``g``.

    Improved lists are only checked for size, realism and the missing-vertex bound.
    """
    problems: list[str] = []
    zero = g.kind.zero()
    heavy = set(table.heavy)
    for u, entries in table.lists.items():
        if len(entries) > table.t + 1:
            problems.append(f"NL({u}) has {len(entries)} > t+1 entries")
        if not entries or entries[0] != (u, zero):
            problems.append(f"NL({u}) does not start with ({u}, 0)")
        reachable = Oracles.distances(g, source=u)
        for v, d in entries:
            if v not in reachable or d < reachable[v]:
                problems.append(f"NL({u}) stores {v} below any real path")
        if u in heavy:
            continue
        outside = Oracles.distances(g, removed=heavy, source=u)
        members = {v: d for v, d in entries}
        for v, d in outside.items():
            if v in members:
                if not improved and outside[v] < members[v]:
                    problems.append(f"NL({u}) holds {v} above its distance in G-Z")
            elif len(entries) != table.t + 1 or not entries[-1][1] < d:
                problems.append(f"NL({u}) misses {v} without being full of closer vertices")
    if improved:
        return problems
    for v in g.vertices:
        count = len(table.inverse.get(v, set()) - {v})
        indeg = sum(1 for tail, _ in g.in_edges(v) if tail != g.source)
        if count > appearance_bound(table.p, indeg):
            problems.append(f"{v} sits in {count} lists > bound for indeg {indeg}")
        if v in heavy and v not in table.initial_heavy and count + 1 < table.p:
            problems.append(f"heavy {v} sits in only {count + 1} < p lists with its own")
    return problems


def alive_violations(state: AliveState) -> list[str]:
    """Check the alive-subgraph invariants; returns one message per violation."""
    g, g0, t, p = state.graph, state.alive, state.t, state.p
    s = g.source
    problems: list[str] = []
    for v in g.vertices:
        out_alive = {head for head, _ in g0.out_edges(v)}
        out_full = {head for head, _ in g.out_edges(v)}
        if v == s:
            expected = {edge.head for edge in g.top_t_edges(s, t)}
            if out_alive != expected:
                problems.append(f"source alive edges {sorted(out_alive)} != top-t {sorted(expected)}")
            continue
        if len(out_alive) < t and not out_alive >= out_full - state.permanent:
            problems.append(f"{v}: outdeg {len(out_alive)} < t and missing non-heavy out-neighbours")
        if len(out_alive) > 3 * t:
            problems.append(f"{v}: outdeg {len(out_alive)} > 3t")
        if state.alive_indeg(v) > p:
            problems.append(f"{v}: indeg {state.alive_indeg(v)} > p")
        weights = dict(g.out_edges(v))
        for head, weight in weights.items():
            if head in out_alive or head in state.permanent:
                continue
            heavier_alive = sorted(y for y in out_alive if weight < weights[y])
            if heavier_alive:
                problems.append(f"{v}: {head} skipped while heavier {heavier_alive} is alive")
    if len(state.permanent) * p > 3 * state.initial_n * t:
        problems.append(f"|Z0|={len(state.permanent)} > 3nt/p")
    return problems


# ---------------------------------------------------------------------------
# Shared fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def star_graph() -> Digraph:
    """The four-vertex example: s->a (1), s->b (4), a->b (2), b->c (1)."""
    return Digraph.from_edges(4, 0, STAR_EDGES)


@pytest.fixture
def runtime() -> Runtime:
    return Runtime(SequentialBackend())


@pytest.fixture
def random_graph() -> Callable[..., Digraph]:
    """Seeded random digraph factory over real weights."""

    def build(n: int, m: int, seed: int, kind: str = "real") -> Digraph:
        return to_digraph(generate("random-gnm", n, min(m, n * (n - 1)), seed=seed, kind=kind))

    return build


@pytest.fixture
def random_instance() -> Callable[..., GraphInstance]:
    def build(n: int, m: int, seed: int, kind: str = "real") -> GraphInstance:
        return generate("random-gnm", n, min(m, n * (n - 1)), seed=seed, kind=kind)

    return build
