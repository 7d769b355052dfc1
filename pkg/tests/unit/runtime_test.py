"""Unit tests for the round-structured runtime."""

import random
from fractions import Fraction

import pytest

from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.runtime import (
    Counters,
    EmptyReduce,
    Runtime,
    SequentialBackend,
    ThreadPoolBackend,
    ceil_log2,
    get_runtime,
    reduce_min,
)
from tradeoff_sssp.core.weights import InvalidParameter, LiftedWeight, lift


class TestParMap:
    def test_counts_one_round(self, runtime: Runtime) -> None:
        out = runtime.par_map(list(range(8)), lambda x: x * 2)
        assert out == [0, 2, 4, 6, 8, 10, 12, 14]
        assert runtime.counters == Counters(work=8, depth=1)

    def test_empty_round_is_free(self, runtime: Runtime) -> None:
        assert runtime.par_map([], lambda x: x) == []
        assert runtime.counters == Counters()

    def test_nested_rounds_add_depth(self, runtime: Runtime) -> None:
        runtime.par_map(list(range(4)), lambda _: runtime.par_map(list(range(4)), lambda y: y))
        assert runtime.counters == Counters(work=20, depth=2)

    def test_callable_cost(self, runtime: Runtime) -> None:
        runtime.par_map([1, 2, 3], lambda x: x, cost=lambda x: x)
        assert runtime.counters.work == 6

    def test_error_propagates_after_round(self, runtime: Runtime) -> None:
        seen: list[int] = []

        def task(x: int) -> int:
            seen.append(x)
            if x == 1:
                raise ValueError("boom")
            return x

        with pytest.raises(ValueError, match="boom"):
            runtime.par_map([0, 1, 2], task)
        assert sorted(seen) == [0, 1, 2]


class TestParReduce:
    def test_min_of_sixteen(self, runtime: Runtime) -> None:
        assert runtime.par_reduce(list(range(16, 0, -1)), min) == 1
        assert runtime.counters == Counters(work=16, depth=4)

    def test_single_item(self, runtime: Runtime) -> None:
        assert runtime.par_reduce([5], min) == 5
        assert runtime.counters.depth == 0

    def test_empty_without_identity_raises(self, runtime: Runtime) -> None:
        with pytest.raises(EmptyReduce):
            runtime.par_reduce([], min)

    def test_empty_with_identity(self, runtime: Runtime) -> None:
        assert runtime.par_reduce([], min, identity=0) == 0

    def test_min_combiner_on_random_triples(self, runtime: Runtime) -> None:
        rng = random.Random(3)
        for _ in range(1000):
            a, b, c = (lift(rng.randrange(6), rng.randrange(6), Fraction(rng.randrange(8), 2)) for _ in range(3))
            left = reduce_min(runtime, [reduce_min(runtime, [a, b]), c])
            right = reduce_min(runtime, [a, reduce_min(runtime, [b, c])])
            assert left == right == min(a, b, c)
            assert reduce_min(runtime, [a, b]) == reduce_min(runtime, [b, a])

    def test_min_of_star_edges(self, runtime: Runtime, star_graph: Digraph) -> None:
        lightest = reduce_min(runtime, (edge.weight for edge in star_graph.edges()))
        assert lightest == LiftedWeight(Fraction(1), 1, 1)


class TestChargeBatch:
    def test_charges_log_levels(self, runtime: Runtime) -> None:
        runtime.charge_batch(5, 16)
        assert runtime.counters == Counters(work=20, depth=5)

    def test_zero_edits_are_free(self, runtime: Runtime) -> None:
        runtime.charge_batch(0, 1000)
        assert runtime.counters == Counters()


class TestBackends:
    def test_thread_pool_matches_sequential(self) -> None:
        weights = [lift(0, i, Fraction(i % 7, 3)) for i in range(1, 40)]
        seq = Runtime(SequentialBackend())
        backend = ThreadPoolBackend(4)
        par = Runtime(backend)
        try:
            for rt in (seq, par):
                rt.par_map(weights, lambda w, rt=rt: rt.par_map([w, w], lambda x: x + x))
                reduce_min(rt, weights)
        finally:
            backend.shutdown()
        assert seq.counters == par.counters

    def test_environment_selects_backend(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("TRADEOFF_SSSP_BACKEND", "par")
        monkeypatch.setenv("TRADEOFF_SSSP_WORKERS", "2")
        rt = get_runtime()
        assert isinstance(rt.backend, ThreadPoolBackend)
        rt.backend.shutdown()

    def test_argument_overrides_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("TRADEOFF_SSSP_BACKEND", "par")
        assert isinstance(get_runtime("seq").backend, SequentialBackend)

    @pytest.mark.parametrize(
        ("backend", "workers"),
        [("gpu", None), ("par", "many")],
        ids=["unknown-backend", "bad-workers"],
    )
    def test_invalid_configuration(self, monkeypatch: pytest.MonkeyPatch, backend: str, workers: str | None) -> None:
        if workers is not None:
            monkeypatch.setenv("TRADEOFF_SSSP_WORKERS", workers)
        with pytest.raises(InvalidParameter):
            get_runtime(backend)


@pytest.mark.parametrize(("value", "expected"), [(1, 0), (2, 1), (3, 2), (16, 4), (17, 5)])
def test_ceil_log2(value: int, expected: int) -> None:
    assert ceil_log2(value) == expected
