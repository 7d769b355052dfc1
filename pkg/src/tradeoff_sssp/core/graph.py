"""Weighted digraph with ordered adjacency and contraction into the source.

Out-adjacency is kept twice: a head-keyed map used to merge parallel edges and a
weight-ordered list used to read the lightest ``t`` edges. Both views are
updated together by every edit; ``map_touches`` counts ordered-map node visits
so batch edits can be checked against ``MAP_TOUCH_CONSTANT * k * ceil(log2 n)``.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from sortedcontainers import SortedDict, SortedList, SortedSet

from tradeoff_sssp.core.ports.weight_kind import WeightKind
from tradeoff_sssp.core.runtime import Runtime, ceil_log2
from tradeoff_sssp.core.weights import InvalidParameter, LiftedKind, LiftedWeight

logger = logging.getLogger(__name__)

# An update touches the head map, both sides of the weight list and the in-map.
MAP_TOUCH_CONSTANT = 4


class InvalidContraction(ValueError):
    """Raised when a contraction would merge the source into itself."""


class MissingDistance(KeyError):
    """Raised when a contracted vertex has no recorded distance."""


class UnknownVertex(KeyError):
    """Raised when a vertex id is not part of the graph."""


@dataclass(frozen=True)
class Edge:
    tail: int
    head: int
    weight: Any


@dataclass(frozen=True)
class ContractionRecord:
    dists: dict[int, Any]
    rewritten: list[tuple[int, int]]
    edits: int
    touches: int


@dataclass(frozen=True)
class SplitMapping:
    representative: dict[int, int]
    original: dict[int, int]
    source: int = 0


class Digraph:
    def __init__(self, kind: WeightKind, source: int, vertices: Iterable[int] = ()) -> None:
        self.kind = kind
        self.source = source
        self._vertices: SortedSet = SortedSet()
        self._out: dict[int, SortedDict] = {}
        self._out_by_weight: dict[int, SortedList] = {}
        self._in: dict[int, SortedDict] = {}
        self._origin: dict[tuple[int, int], tuple[int, int]] = {}
        self._edge_count = 0
        self.rewrite_counts: Counter[tuple[int, int]] = Counter()
        self.map_touches = 0
        self.add_vertex(source)
        for v in vertices:
            self.add_vertex(v)

    @classmethod
    def from_edges(
        cls,
        n: int,
        source: int,
        edges: Iterable[tuple[int, int, Any]],
        kind: WeightKind | None = None,
    ) -> Digraph:
        """Build a graph on ``0..n-1`` from ``(tail, head, atom)`` triples.

        Self-loops and edges into the source are dropped; parallel edges keep
        the lightest copy.
        """
        if not 0 <= source < max(n, 1):
            raise UnknownVertex(f"Source {source} outside 0..{n - 1}")
        weight_kind: WeightKind = kind if kind is not None else LiftedKind()
        graph = cls(weight_kind, source, range(n))
        for tail, head, atom in edges:
            if not (0 <= tail < n and 0 <= head < n):
                raise UnknownVertex(f"Edge {tail}->{head} outside 0..{n - 1}")
            graph.add_edge(tail, head, weight_kind.lift(tail, head, atom))
        return graph

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._edge_count

    @property
    def vertices(self) -> list[int]:
        return list(self._vertices)

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def _require(self, v: int) -> None:
        if v not in self._vertices:
            raise UnknownVertex(f"Vertex {v} is not in the graph")

    def weight(self, tail: int, head: int) -> Any | None:
        out = self._out.get(tail)
        return None if out is None else out.get(head)

    def out_edges(self, v: int) -> list[tuple[int, Any]]:
        self._require(v)
        return list(self._out[v].items())

    def out_by_weight(self, v: int) -> list[tuple[Any, int]]:
        self._require(v)
        return list(self._out_by_weight[v])

    def in_edges(self, v: int) -> list[tuple[int, Any]]:
        self._require(v)
        return list(self._in[v].items())

    def outdeg(self, v: int) -> int:
        return len(self._out[v])

    def indeg(self, v: int) -> int:
        return len(self._in[v])

    def edges(self) -> Iterator[Edge]:
        for tail in self._vertices:
            for head, weight in self._out[tail].items():
                yield Edge(tail, head, weight)

    def origin(self, tail: int, head: int) -> tuple[int, int]:
        return self._origin[(tail, head)]

    def top_t_edges(self, v: int, t: int) -> list[Edge]:
        self._require(v)
        return [Edge(v, head, weight) for weight, head in self._out_by_weight[v][:t]]

    # ------------------------------------------------------------------
    # Edits
    # ------------------------------------------------------------------

    def _touch(self, container: Any) -> None:
        self.map_touches += max(1, ceil_log2(len(container) + 1))

    def add_vertex(self, v: int) -> None:
        if v in self._vertices:
            return
        self._vertices.add(v)
        self._out[v] = SortedDict()
        self._out_by_weight[v] = SortedList()
        self._in[v] = SortedDict()

    def add_edge(self, tail: int, head: int, weight: Any, origin: tuple[int, int] | None = None) -> bool:
        """Insert or min-merge ``tail -> head``; returns whether the graph changed."""
        self._require(tail)
        self._require(head)
        if tail == head or head == self.source:
            return False
        out = self._out[tail]
        current = out.get(head)
        if current is not None:
            if not weight < current:
                return False
            self._out_by_weight[tail].remove((current, head))
            self._touch(self._out_by_weight[tail])
        else:
            self._edge_count += 1
        out[head] = weight
        self._touch(out)
        self._out_by_weight[tail].add((weight, head))
        self._touch(self._out_by_weight[tail])
        self._in[head][tail] = weight
        self._touch(self._in[head])
        self._origin[(tail, head)] = origin if origin is not None else (tail, head)
        return True

    def remove_edge(self, tail: int, head: int) -> None:
        weight = self._out[tail].pop(head)
        self._touch(self._out[tail])
        self._out_by_weight[tail].remove((weight, head))
        self._touch(self._out_by_weight[tail])
        del self._in[head][tail]
        self._touch(self._in[head])
        del self._origin[(tail, head)]
        self._edge_count -= 1

    def remove_vertex(self, v: int) -> int:
        """Delete ``v`` and its incident edges; returns the number of edges removed."""
        self._require(v)
        removed = 0
        for head in list(self._out[v].keys()):
            self.remove_edge(v, head)
            removed += 1
        for tail in list(self._in[v].keys()):
            self.remove_edge(tail, v)
            removed += 1
        self._vertices.remove(v)
        del self._out[v], self._out_by_weight[v], self._in[v]
        return removed

    def copy(self) -> Digraph:
        clone = Digraph(self.kind, self.source, self._vertices)
        for edge in self.edges():
            clone.add_edge(edge.tail, edge.head, edge.weight, self._origin[(edge.tail, edge.head)])
        clone.rewrite_counts = Counter(self.rewrite_counts)
        clone.map_touches = 0
        return clone

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m}, source={self.source}, kind={self.kind.name})"


class TopTView:
    """``G_t[S]`` read straight from ``graph``; only valid until ``graph`` is edited."""

    def __init__(self, graph: Digraph, vertices: Iterable[int], t: int) -> None:
        self.graph = graph
        self.t = t
        self._keep = {v for v in vertices if graph.has_vertex(v)}
        self._keep.add(graph.source)

    @property
    def kind(self) -> WeightKind:
        return self.graph.kind

    @property
    def source(self) -> int:
        return self.graph.source

    @property
    def n(self) -> int:
        return len(self._keep)

    @property
    def m(self) -> int:
        return sum(self.outdeg(v) for v in self._keep)

    @property
    def vertices(self) -> list[int]:
        return sorted(self._keep)

    def has_vertex(self, v: int) -> bool:
        return v in self._keep

    def top_t_edges(self, v: int, t: int) -> list[Edge]:
        if v not in self._keep:
            raise UnknownVertex(f"Vertex {v} is not in the graph")
        return [edge for edge in self.graph.top_t_edges(v, self.t) if edge.head in self._keep][:t]

    def out_edges(self, v: int) -> list[tuple[int, Any]]:
        return [(edge.head, edge.weight) for edge in self.top_t_edges(v, self.t)]

    def outdeg(self, v: int) -> int:
        return len(self.top_t_edges(v, self.t))

    def edges(self) -> Iterator[Edge]:
        for v in self.vertices:
            yield from self.top_t_edges(v, self.t)

    def origin(self, tail: int, head: int) -> tuple[int, int]:
        return self.graph.origin(tail, head)

    def __repr__(self) -> str:
        return f"TopTView(n={self.n}, t={self.t}, source={self.source})"


GraphView = Digraph | TopTView


def top_t_edges(g: Digraph, v: int, t: int) -> list[Edge]:
    return g.top_t_edges(v, t)


def induced_top_t(g: GraphView, vertices: Iterable[int], t: int, runtime: Runtime | None = None) -> Digraph:
    """``G_t[S]``: keep the lightest ``t`` out-edges of each vertex, then restrict to ``S``."""
    keep = set(vertices)
    keep.add(g.source)
    sub = Digraph(g.kind, g.source, (v for v in keep if g.has_vertex(v)))
    inserted = 0
    for v in sub.vertices:
        for edge in g.top_t_edges(v, t):
            if edge.head in keep and sub.add_edge(v, edge.head, edge.weight, g.origin(v, edge.head)):
                inserted += 1
    if runtime is not None:
        runtime.charge_batch(inserted, g.n)
    return sub


def top_t_subgraph(g: Digraph, t: int, runtime: Runtime | None = None) -> Digraph:
    return induced_top_t(g, g.vertices, t, runtime)


def contract_into_source(
    g: Digraph,
    contracted: Iterable[int],
    dists: Mapping[int, Any],
    runtime: Runtime | None = None,
) -> ContractionRecord:
    """Merge ``contracted`` into the source in place.

    Every edge ``x -> v`` leaving the contracted set becomes ``s -> v`` with
    weight ``dist(s, x) + w(x, v)``; parallel edges keep the lightest copy.
    """
    group = sorted(set(contracted))
    if g.source in group:
        raise InvalidContraction(f"Cannot contract the source {g.source} into itself")
    for x in group:
        g._require(x)
        if x not in dists:
            raise MissingDistance(f"No distance recorded for contracted vertex {x}")
    if not group:
        return ContractionRecord({}, [], 0, 0)

    size_before = g.n
    touches_before = g.map_touches
    members = set(group)
    best: dict[int, tuple[Any, tuple[int, int]]] = {}
    rewritten: list[tuple[int, int]] = []
    for x in group:
        for head, weight in g.out_edges(x):
            if head in members:
                continue
            candidate = g.kind.add_edge_batch(dists[x], [weight])
            origin = g.origin(x, head)
            g.rewrite_counts[origin] += 1
            rewritten.append((x, head))
            held = best.get(head)
            if held is None or candidate < held[0]:
                best[head] = (candidate, origin)

    edits = 0
    for x in group:
        edits += g.remove_vertex(x)
    for head in sorted(best):
        weight, origin = best[head]
        if g.add_edge(g.source, head, weight, origin):
            edits += 1

    if runtime is not None:
        runtime.charge_batch(edits, size_before)
    logger.debug("Contracted %d vertices into %d (%d edge edits)", len(group), g.source, edits)
    return ContractionRecord(
        dists={x: dists[x] for x in group},
        rewritten=rewritten,
        edits=edits,
        touches=g.map_touches - touches_before,
    )


def split_constant_degree(g: Digraph) -> tuple[Digraph, SplitMapping]:
    """Replace high-degree vertices by chains so every vertex but the source has degree <= 2.

    A vertex with in-degree ``k > 2`` gets an in-chain ``a_1 -> ... -> a_k -> r``
    where ``a_i`` receives its ``i``-th in-edge; a vertex with out-degree ``j > 2``
    gets an out-chain ``r -> b_1 -> ... -> b_j`` where ``b_i`` emits its ``i``-th
    out-edge. Chain ids are consecutive and increasing, chain edges weigh
    ``(0, 0, 1)``, and original edges keep scalar and hop count with the label
    delta recomputed, so the lifted assumptions hold in the split graph.
    """
    if not isinstance(g.kind, LiftedKind):
        raise InvalidParameter(f"Vertex splitting needs lifted weights, got kind {g.kind.name!r}")

    next_id = 0
    representative: dict[int, int] = {}
    in_slots: dict[tuple[int, int], int] = {}
    out_slots: dict[tuple[int, int], int] = {}
    owner: dict[int, int] = {}
    chains: list[tuple[int, int]] = []

    for v in g.vertices:
        in_tails = [tail for tail, _ in g.in_edges(v)]
        out_heads = [head for head, _ in g.out_edges(v)]
        split_in = v != g.source and len(in_tails) > 2
        split_out = v != g.source and len(out_heads) > 2
        previous: int | None = None
        if split_in:
            for tail in in_tails:
                in_slots[(tail, v)] = next_id
                owner[next_id] = v
                if previous is not None:
                    chains.append((previous, next_id))
                previous = next_id
                next_id += 1
        root = next_id
        representative[v] = root
        owner[root] = v
        if previous is not None:
            chains.append((previous, root))
        next_id += 1
        previous = root
        if split_out:
            for head in out_heads:
                out_slots[(v, head)] = next_id
                owner[next_id] = v
                chains.append((previous, next_id))
                previous = next_id
                next_id += 1

    source = representative[g.source]
    split = Digraph(g.kind, source, range(next_id))
    for tail, head in chains:
        split.add_edge(tail, head, LiftedWeight(Fraction(0), 0, head - tail), origin=(tail, head))
    for edge in g.edges():
        tail = out_slots.get((edge.tail, edge.head), representative[edge.tail])
        head = in_slots.get((edge.tail, edge.head), representative[edge.head])
        weight: LiftedWeight = edge.weight
        lifted = LiftedWeight(weight.scalar, weight.hops, head - tail)
        split.add_edge(tail, head, lifted, g.origin(edge.tail, edge.head))

    logger.debug("Split %d vertices into %d (%d chain edges)", g.n, split.n, len(chains))
    return split, SplitMapping(representative=representative, original=owner, source=source)


def distances_from_split(split_dist: Mapping[int, LiftedWeight], mapping: SplitMapping) -> dict[int, LiftedWeight]:
    """Read original-vertex distances off the representatives of a split graph."""
    original_source = mapping.original[mapping.source]
    dist: dict[int, LiftedWeight] = {}
    for v, rep in mapping.representative.items():
        found = split_dist.get(rep)
        if found is not None:
            dist[v] = LiftedWeight(found.scalar, found.hops, v - original_source)
    return dist
