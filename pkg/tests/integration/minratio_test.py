"""Acceptance sweeps for incremental minimum ratio cycles."""

import random
from fractions import Fraction

import pytest

from tests.conftest import Oracles
from tradeoff_sssp.core.minratio import Comparator, attests, cycle_ratio, empty_state, insert_edge
from tradeoff_sssp.core.runtime import Runtime


def _script(rng: random.Random, n: int, length: int) -> list[tuple[int, int]]:
    """Random insertions mixing fresh pairs, repeated pairs and self-loops."""
    script: list[tuple[int, int]] = []
    for _ in range(length):
        roll = rng.random()
        if roll < 0.15:
            v = rng.randrange(n)
            script.append((v, v))
        elif roll < 0.45 and script:
            script.append(rng.choice(script))
        else:
            script.append((rng.randrange(n), rng.randrange(n)))
    return script


@pytest.mark.parametrize("seed", range(50))
def test_random_scripts(seed: int) -> None:
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    script = _script(rng, n, rng.randint(20, 200))
    comparator: Comparator = "basic" if seed % 2 == 0 else "dense"
    state = empty_state()
    previous: Fraction | None = None
    for p, q in script:
        cost = Fraction(rng.randint(-10, 20), rng.randint(1, 4))
        time = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        state = insert_edge(state, p, q, cost, time, comparator, 1 + seed % 3, Runtime())
        assert state.ratio == Oracles.minimum_ratio(state.edges)
        if state.ratio is None:
            continue
        assert state.cycle is not None
        assert cycle_ratio(state.cycle) == state.ratio
        assert state.potential is not None
        assert attests(state.edges, state.potential, state.ratio)
        assert previous is None or state.ratio <= previous
        previous = state.ratio


def test_scripts_repeat_pairs_and_close_loops() -> None:
    for seed in range(50):
        rng = random.Random(seed)
        n = rng.randint(2, 8)
        script = _script(rng, n, rng.randint(20, 200))
        assert any(p == q for p, q in script)
        assert len(set(script)) < len(script)


def test_two_cycle_fixture() -> None:
    state = insert_edge(insert_edge(empty_state(), 0, 1, 2, 1), 1, 0, 4, 3)
    assert state.ratio == Fraction(3, 2)


@pytest.mark.parametrize("comparator", ["basic", "dense"])
def test_self_loop_closes_a_cycle(comparator: Comparator) -> None:
    state = insert_edge(empty_state(), 0, 1, 2, 1, comparator)
    assert state.ratio is None
    state = insert_edge(state, 1, 1, 5, 2, comparator)
    assert state.ratio == Fraction(5, 2)
    assert state.cycle is not None
    assert [(e.tail, e.head) for e in state.cycle] == [(1, 1)]


@pytest.mark.parametrize("comparator", ["basic", "dense"])
def test_parallel_edge_lowers_ratio(comparator: Comparator) -> None:
    state = insert_edge(insert_edge(empty_state(), 0, 1, 6, 1, comparator), 1, 0, 6, 1, comparator)
    assert state.ratio == 6
    state = insert_edge(state, 0, 1, 0, 2, comparator)
    assert state.ratio == 2
    assert state.ratio == Oracles.minimum_ratio(state.edges)
    state = insert_edge(state, 0, 1, 9, 1, comparator)
    assert state.ratio == 2
