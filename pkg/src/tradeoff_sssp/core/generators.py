"""Seeded graph families.

Weights are drawn from one ``random.Random(seed)``: rational weights have a
numerator in ``[0, 100]`` and a denominator in ``[1, 8]``, lex labels lie in
``[0, 1000)`` and binary exponents in ``[0, 40)``. Vertex 0 is the source.
"""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from tradeoff_sssp.core.exotic.sssp import build_binary_graph, build_lex_graph
from tradeoff_sssp.core.graph import Digraph

logger = logging.getLogger(__name__)

FAMILIES: tuple[str, ...] = ("random-gnm", "grid", "layered", "star", "complete")
KINDS: tuple[str, ...] = ("real", "lex", "bin")

MAX_NUMERATOR = 100
MAX_DENOMINATOR = 8
MAX_LABEL = 1000
MAX_EXPONENT = 40


class GenerationError(ValueError):
    """Raised when a family cannot produce a graph with the requested size."""


@dataclass(frozen=True)
class GraphInstance:
    """A graph as it is stored on disk: size, source and ``(tail, head, atom)`` edges."""

    n: int
    source: int
    kind: str
    edges: tuple[tuple[int, int, Any], ...]

    @property
    def m(self) -> int:
        return len(self.edges)


def to_digraph(instance: GraphInstance) -> Digraph:
    if instance.kind == "lex":
        return build_lex_graph(instance.n, instance.source, instance.edges)
    if instance.kind == "bin":
        return build_binary_graph(instance.n, instance.source, instance.edges).graph
    return Digraph.from_edges(instance.n, instance.source, instance.edges)


def _random_gnm(n: int, m: int | None, rng: random.Random) -> list[tuple[int, int]]:
    if m is None:
        raise GenerationError("random-gnm needs an edge count m")
    limit = n * (n - 1)
    if not 0 <= m <= limit:
        raise GenerationError(f"random-gnm with n={n} allows 0..{limit} edges, got m={m}")
    picked = rng.sample(range(limit), m)
    pairs = []
    for code in sorted(picked):
        tail, offset = divmod(code, n - 1)
        head = offset if offset < tail else offset + 1
        pairs.append((tail, head))
    return pairs


def _grid(n: int, m: int | None, rng: random.Random) -> list[tuple[int, int]]:
    width = math.isqrt(n - 1) + 1
    pairs = []
    for v in range(n):
        col = v % width
        right = v + 1
        down = v + width
        if col + 1 < width and right < n:
            pairs += [(v, right), (right, v)]
        if down < n:
            pairs += [(v, down), (down, v)]
    return pairs


def _layered(n: int, m: int | None, rng: random.Random) -> list[tuple[int, int]]:
    width = max(1, math.isqrt(n - 1))
    layers = [[0]] + [list(range(i, min(i + width, n))) for i in range(1, n, width)]
    pairs = []
    for upper, lower in zip(layers, layers[1:]):
        pairs += [(tail, head) for tail in upper for head in lower]
    return pairs


def _star(n: int, m: int | None, rng: random.Random) -> list[tuple[int, int]]:
    pairs = [(0, v) for v in range(1, n)]
    pairs += [(v, 1) for v in range(2, n)]
    return pairs


def _complete(n: int, m: int | None, rng: random.Random) -> list[tuple[int, int]]:
    return [(tail, head) for tail in range(n) for head in range(n) if tail != head]


_FAMILIES: dict[str, Callable[[int, int | None, random.Random], list[tuple[int, int]]]] = {
    "random-gnm": _random_gnm,
    "grid": _grid,
    "layered": _layered,
    "star": _star,
    "complete": _complete,
}


def _atom(kind: str, rng: random.Random) -> Any:
    if kind == "lex":
        return rng.randrange(MAX_LABEL)
    if kind == "bin":
        return rng.randrange(MAX_EXPONENT)
    return Fraction(rng.randint(0, MAX_NUMERATOR), rng.randint(1, MAX_DENOMINATOR))


def generate(family: str, n: int, m: int | None = None, seed: int = 0, kind: str = "real") -> GraphInstance:
    """Deterministic graph for ``(family, n, m, seed, kind)``."""
    builder = _FAMILIES.get(family)
    if builder is None:
        raise GenerationError(f"Unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if kind not in KINDS:
        raise GenerationError(f"Unknown weight kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 1:
        raise GenerationError(f"A graph needs at least one vertex, got n={n}")
    rng = random.Random(seed)
    pairs = builder(n, m, rng)
    edges = tuple((tail, head, _atom(kind, rng)) for tail, head in pairs)
    logger.debug("Generated %s graph: n=%d m=%d seed=%d kind=%s", family, n, len(edges), seed, kind)
    return GraphInstance(n=n, source=0, kind=kind, edges=edges)
