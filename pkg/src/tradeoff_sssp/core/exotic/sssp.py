"""SSSP over tree-backed weights.

Both entry points run the dense algorithm with the exotic phase schedule while
the kind keeps atom lists of up to ``t`` atoms, which is all a distance inside
a near-list or a ``t``-nearest table ever needs.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from tradeoff_sssp.core.dense import clamp_t, dense_sssp, exotic_schedule
from tradeoff_sssp.core.exotic.binary import BinKind
from tradeoff_sssp.core.exotic.lex import LexKind, compress_labels
from tradeoff_sssp.core.exotic.normalize import normalize_exponents
from tradeoff_sssp.core.exotic.weight import ExoticKind, ExoticWeight
from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.ports.observer import DiscoveryObserver
from tradeoff_sssp.core.result import SsspResult
from tradeoff_sssp.core.runtime import Runtime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryInstance:
    graph: Digraph
    kind: BinKind
    exponents: dict[tuple[int, int], int]


def build_lex_graph(n: int, source: int, edges: Iterable[tuple[int, int, int]]) -> Digraph:
    """Graph whose edge labels are rank-compressed into ``[0, m)``."""
    triples = list(edges)
    ranks = compress_labels(label for _, _, label in triples)
    labels = sorted(ranks, key=ranks.__getitem__)
    kind = LexKind(max(1, len(triples)), labels=labels)
    return Digraph.from_edges(n, source, [(tail, head, ranks[label]) for tail, head, label in triples], kind)


def binary_depth(n: int, m: int) -> int:
    """Smallest ``b`` with ``2^b > max(m, 2)^2 * max(n, 2)``."""
    bound = max(m, 2) ** 2 * max(n, 2)
    return bound.bit_length()


def build_binary_graph(n: int, source: int, edges: Iterable[tuple[int, int, int]]) -> BinaryInstance:
    """Graph with weights ``2^w``; exponents are normalized before the depth is fixed."""
    triples = list(edges)
    normalized = normalize_exponents([w for _, _, w in triples], len(triples))
    kind = BinKind(binary_depth(n, len(triples)))
    exponents: dict[tuple[int, int], int] = {}
    for tail, head, w in triples:
        held = exponents.get((tail, head))
        if held is None or w < held:
            exponents[(tail, head)] = w
    graph = Digraph.from_edges(
        n,
        source,
        [(tail, head, e) for (tail, head, _), e in zip(triples, normalized)],
        kind,
    )
    logger.debug("Binary graph: n=%d m=%d depth=%d", n, len(triples), kind.bits)
    return BinaryInstance(graph=graph, kind=kind, exponents=exponents)


def original_distances(instance: BinaryInstance, result: SsspResult) -> dict[int, int]:
    """Distances in the original ``2^w`` weights, summed along the parent tree."""
    values: dict[int, int] = {result.source: 0}
    for v in sorted(result.dist, key=lambda u: len(result.path_to(u))):
        if v != result.source:
            tail = result.parent[v]
            values[v] = values[tail] + (1 << instance.exponents[(tail, v)])
    return values


def _run(
    g: Digraph,
    kind: ExoticKind,
    t: int,
    runtime: Runtime | None,
    observer: DiscoveryObserver | None,
) -> SsspResult:
    budget = clamp_t(g.n, t)
    with kind.atom_budget(budget):
        return dense_sssp(g, budget, runtime, observer, schedule=exotic_schedule)


def lex_bottleneck_sssp(
    g: Digraph,
    t: int,
    runtime: Runtime | None = None,
    observer: DiscoveryObserver | None = None,
) -> SsspResult:
    if not isinstance(g.kind, LexKind):
        raise TypeError(f"lex_bottleneck_sssp needs a lex graph, got kind {g.kind.name!r}")
    return _run(g, g.kind, t, runtime, observer)


def binary_sssp(
    g: Digraph,
    t: int,
    runtime: Runtime | None = None,
    observer: DiscoveryObserver | None = None,
) -> SsspResult:
    if not isinstance(g.kind, BinKind):
        raise TypeError(f"binary_sssp needs a binary graph, got kind {g.kind.name!r}")
    return _run(g, g.kind, t, runtime, observer)


def decoded(kind: ExoticKind, dist: Mapping[int, ExoticWeight]) -> dict[int, Any]:
    return {v: kind.decode(weight.elem) for v, weight in dist.items()}
