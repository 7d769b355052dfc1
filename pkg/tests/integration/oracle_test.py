"""Acceptance sweeps: every exact algorithm against Bellman-Ford on seeded graphs."""

import functools
import math
from collections.abc import Callable
from typing import Any

import pytest

from tests.conftest import Oracles
from tradeoff_sssp.core.basic import basic_sssp
from tradeoff_sssp.core.dense import dense_sssp
from tradeoff_sssp.core.dijkstra import dijkstra_sssp
from tradeoff_sssp.core.generators import FAMILIES, generate, to_digraph
from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.result import SsspResult
from tradeoff_sssp.core.runtime import Runtime
from tradeoff_sssp.core.sparse import sparse_sssp

ALGORITHMS: dict[str, Callable[[Digraph, int, Runtime], SsspResult]] = {
    "basic": lambda g, t, runtime: basic_sssp(g, t, runtime),
    "sparse": lambda g, t, runtime: sparse_sssp(g, t, runtime),
    "dense": lambda g, t, runtime: dense_sssp(g, t, runtime),
}

DENSITIES = ("tree", "sparse", "medium", "complete")
SWEEP_SIZE = 520


def _graph(seed: int) -> Digraph:
    family = FAMILIES[seed % len(FAMILIES)]
    n = 2 + seed % 19
    m = min(n * (n - 1), 2 * n + seed % 40) if family == "random-gnm" else None
    return to_digraph(generate(family, n, m, seed=seed))


@functools.cache
def _sweep_case(seed: int) -> tuple[Digraph, dict[int, Any]]:
    """Graph ``seed`` of the density sweep (``n`` in ``2..60``) and its Bellman-Ford distances."""
    n = 2 + (seed * 13) % 59
    density = DENSITIES[seed % len(DENSITIES)]
    if density == "complete":
        g = to_digraph(generate("complete", n, seed=seed))
    else:
        m = {"tree": n - 1, "sparse": 2 * n, "medium": n * math.isqrt(n)}[density]
        g = to_digraph(generate("random-gnm", n, min(m, n * (n - 1)), seed=seed))
    return g, Oracles.bellman_ford(g, g.source)


def _check_paths(g: Digraph, result: SsspResult) -> None:
    for v, d in result.dist.items():
        path = result.path_to(v)
        assert path[0] == g.source
        assert path[-1] == v
        weights = [g.weight(tail, head) for tail, head in zip(path, path[1:])]
        assert g.kind.add_edge_batch(g.kind.zero(), weights) == d


@pytest.mark.parametrize("algo", sorted(ALGORITHMS))
@pytest.mark.parametrize("seed", range(SWEEP_SIZE))
def test_density_sweep_matches_bellman_ford(algo: str, seed: int) -> None:
    g, expected = _sweep_case(seed)
    result = ALGORITHMS[algo](g, 1 + seed % 5, Runtime())
    assert result.dist == expected
    _check_paths(g, result)


def test_density_sweep_covers_sizes_and_densities() -> None:
    sizes = {2 + (seed * 13) % 59 for seed in range(SWEEP_SIZE)}
    assert sizes == set(range(2, 61))
    complete = {2 + (seed * 13) % 59 for seed in range(SWEEP_SIZE) if seed % len(DENSITIES) == 3}
    assert max(complete) == 60


@pytest.mark.parametrize("algo", sorted(ALGORITHMS))
@pytest.mark.parametrize("seed", range(60))
def test_families_match_bellman_ford(algo: str, seed: int) -> None:
    g = _graph(seed)
    result = ALGORITHMS[algo](g, 1 + seed % 5, Runtime())
    assert result.dist == Oracles.bellman_ford(g, g.source)
    _check_paths(g, result)


@pytest.mark.parametrize("seed", range(40))
def test_dijkstra_matches_bellman_ford(seed: int) -> None:
    g = _graph(seed)
    assert dijkstra_sssp(g, Runtime()).dist == Oracles.bellman_ford(g, g.source)


@pytest.mark.parametrize("t", [1, 2, 3, 7])
@pytest.mark.parametrize("seed", range(10))
def test_basic_step_count(seed: int, t: int) -> None:
    g = _graph(seed)
    result = basic_sssp(g, t, Runtime())
    assert result.steps == math.ceil((len(result.dist) - 1) / t)
