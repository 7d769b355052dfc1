"""Unit tests for lifted weights."""

import itertools
import random
from fractions import Fraction

import pytest

from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.weights import (
    INFINITY,
    InvalidWeight,
    InvariantBreach,
    LiftedKind,
    LiftedWeight,
    Ordering,
    as_fraction,
    compare_lifted,
    lift,
)


def _all_paths(g: Digraph, start: int, limit: int) -> list[list[int]]:
    paths: list[list[int]] = []
    stack = [[start]]
    while stack:
        path = stack.pop()
        paths.append(path)
        if len(path) > limit:
            continue
        for head, _ in g.out_edges(path[-1]):
            if head not in path:
                stack.append([*path, head])
    return paths


def _weight(g: Digraph, path: list[int]) -> LiftedWeight:
    total = g.kind.zero()
    for tail, head in itertools.pairwise(path):
        total = total + g.weight(tail, head)
    return total


class TestLift:
    def test_lifts_into_triple(self) -> None:
        assert lift(0, 3, Fraction(5, 2)) == LiftedWeight(Fraction(5, 2), 1, 3)

    def test_zero_weight_edge_gets_positive_hop(self) -> None:
        assert lift(4, 1, 0) == LiftedWeight(Fraction(0), 1, -3)

    def test_self_loop_is_not_rejected_here(self) -> None:
        assert lift(2, 2, 7) == LiftedWeight(Fraction(7), 1, 0)

    def test_negative_scalar_raises(self) -> None:
        with pytest.raises(InvalidWeight):
            lift(0, 1, -1)

    def test_accepts_strings(self) -> None:
        assert lift(0, 1, "3/4").scalar == Fraction(3, 4)

    def test_rejects_garbage(self) -> None:
        with pytest.raises(InvalidWeight):
            as_fraction("three")


class TestCompareLifted:
    @pytest.mark.parametrize(
        ("a", "b", "expected"),
        [
            ((2, 1, 3), (2, 2, -5), Ordering.LESS),
            ((0, 0, 0), (0, 0, 0), Ordering.EQUAL),
            ((5, 2, 1), (4, 9, 9), Ordering.GREATER),
        ],
        ids=["hops-decide", "identity", "scalar-decides"],
    )
    def test_lexicographic(self, a: tuple[int, int, int], b: tuple[int, int, int], expected: Ordering) -> None:
        left = LiftedWeight(Fraction(a[0]), a[1], a[2])
        right = LiftedWeight(Fraction(b[0]), b[1], b[2])
        assert compare_lifted(left, right) == expected

    def test_addition_is_coordinatewise(self) -> None:
        total = lift(0, 1, 1) + lift(1, 3, Fraction(1, 2))
        assert total == LiftedWeight(Fraction(3, 2), 2, 3)


class TestLiftedKind:
    def test_monoid_laws_on_random_triples(self) -> None:
        kind = LiftedKind()
        rng = random.Random(7)
        for _ in range(1000):
            a, b, c = (lift(rng.randrange(10), rng.randrange(10), Fraction(rng.randrange(20), 3)) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert kind.add_edge_batch(a, [kind.zero()]) == a

    def test_empty_batch_returns_base(self) -> None:
        kind = LiftedKind()
        base = lift(0, 1, 3)
        assert kind.add_edge_batch(base, []) is base

    def test_render_prints_numerator_and_denominator(self) -> None:
        assert LiftedKind().render(lift(0, 1, Fraction(6, 4))) == "3 2"


class TestInfinity:
    def test_exceeds_every_finite_weight(self) -> None:
        assert lift(0, 1, 10**9) < INFINITY
        assert not INFINITY < lift(0, 1, 0)

    def test_cannot_be_added(self) -> None:
        with pytest.raises(InvariantBreach):
            INFINITY + lift(0, 1, 1)


class TestSimplifyingAssumptions:
    @pytest.mark.parametrize("seed", range(5))
    def test_subpaths_lighter_and_endpoints_distinct(self, seed: int) -> None:
        rng = random.Random(seed)
        n = 7
        edges = [(u, v, rng.randrange(3)) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4]
        g = Digraph.from_edges(n, 0, edges)
        for start in range(n):
            paths = _all_paths(g, start, 5)
            by_end: dict[int, set[LiftedWeight]] = {}
            for path in paths:
                weight = _weight(g, path)
                for cut in range(1, len(path)):
                    assert _weight(g, path[:cut]) < weight
                by_end.setdefault(path[-1], set()).add(weight)
            ends = list(by_end)
            for x, y in itertools.combinations(ends, 2):
                assert not by_end[x] & by_end[y]
