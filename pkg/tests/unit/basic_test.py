"""Unit tests for the reference Dijkstra and the basic tradeoff algorithm."""

from collections.abc import Callable
from typing import Any

import pytest

from tests.conftest import Oracles
from tradeoff_sssp.core.basic import basic_sssp
from tradeoff_sssp.core.dijkstra import dijkstra_sssp
from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.result import DiscoveryStep, SsspResult
from tradeoff_sssp.core.runtime import Runtime
from tradeoff_sssp.core.weights import INFINITY, InvalidParameter


def _scalars(result: SsspResult) -> dict[int, Any]:
    return {v: d.scalar for v, d in result.dist.items()}


class TestDijkstra:
    def test_star(self, star_graph: Digraph) -> None:
        result = dijkstra_sssp(star_graph, Runtime())
        assert _scalars(result) == {0: 0, 1: 1, 2: 3, 3: 4}
        assert result.steps == 3
        assert result.params.t == 1

    def test_parents_are_tight(self, star_graph: Digraph) -> None:
        result = dijkstra_sssp(star_graph, Runtime())
        assert result.path_to(3) == [0, 1, 2, 3]


class TestBasic:
    @pytest.mark.parametrize(("t", "steps"), [(1, 3), (2, 2), (3, 1), (10, 1)], ids=["t1", "t2", "t3", "t10"])
    def test_star_steps(self, star_graph: Digraph, t: int, steps: int) -> None:
        result = basic_sssp(star_graph, t, Runtime())
        assert _scalars(result) == {0: 0, 1: 1, 2: 3, 3: 4}
        assert result.steps == steps

    def test_discovery_sets(self, star_graph: Digraph) -> None:
        seen: list[list[int]] = []

        def observe(step: DiscoveryStep) -> None:
            seen.append(sorted(step.discovered))

        basic_sssp(star_graph, 2, Runtime(), observer=observe)
        assert seen == [[1, 2], [3]]

    def test_input_not_modified(self, star_graph: Digraph) -> None:
        before = list(star_graph.edges())
        basic_sssp(star_graph, 2, Runtime())
        assert list(star_graph.edges()) == before

    def test_unreachable_vertices(self) -> None:
        g = Digraph.from_edges(5, 0, [(0, 1, 2), (3, 4, 1)])
        result = basic_sssp(g, 2, Runtime())
        assert set(result.dist) == {0, 1}
        assert result.distance(4) is INFINITY
        assert not result.reached(3)
        assert result.path_to(4) == []
        assert result.steps == 1

    def test_single_vertex(self) -> None:
        result = basic_sssp(Digraph.from_edges(1, 0, []), 3, Runtime())
        assert result.steps == 0
        assert set(result.dist) == {0}

    def test_rejects_zero_t(self, star_graph: Digraph) -> None:
        with pytest.raises(InvalidParameter):
            basic_sssp(star_graph, 0)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_matches_oracle(self, random_graph: Callable[..., Digraph], seed: int) -> None:
        g = random_graph(15, 45, seed)
        t = 1 + seed % 4
        result = basic_sssp(g, t, Runtime())
        assert result.dist == Oracles.distances(g)
        for v in result.dist:
            path = result.path_to(v)
            assert path[0] == g.source and path[-1] == v

    def test_counters_are_a_delta(self, star_graph: Digraph) -> None:
        runtime = Runtime()
        first = basic_sssp(star_graph, 2, runtime)
        second = basic_sssp(star_graph, 2, runtime)
        assert first.counters == second.counters
        assert runtime.counters.work == 2 * first.counters.work
