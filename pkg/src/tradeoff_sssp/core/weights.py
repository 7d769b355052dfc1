"""Ordered additive weights.

Every algorithm works on *lifted* weights: a scalar edge weight ``w`` on the
edge ``u -> v`` becomes the triple ``(w, 1, v - u)`` compared lexicographically.
Along a path the hop count grows strictly and the last coordinate telescopes
to ``end - start``, so proper subpaths are strictly lighter and two paths from
the same origin to different endpoints never tie.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any


class InvalidWeight(ValueError):
    """Raised when an edge weight is outside the admissible range."""


class InvalidParameter(ValueError):
    """Raised when an algorithm parameter (t, p, backend, ...) is out of range."""


class InvariantBreach(RuntimeError):
    """Raised when a structural invariant that the algorithms rely on is violated."""


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a: Any, b: Any) -> Ordering:
        if a < b:
            return cls.LESS
        if b < a:
            return cls.GREATER
        return cls.EQUAL


def as_fraction(value: Fraction | int | str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidWeight(f"Not a rational weight: {value!r}") from exc


@dataclass(frozen=True, order=True)
class LiftedWeight:
    scalar: Fraction
    hops: int = 0
    delta: int = 0

    def __add__(self, other: LiftedWeight) -> LiftedWeight:
        if not isinstance(other, LiftedWeight):
            return NotImplemented
        return LiftedWeight(self.scalar + other.scalar, self.hops + other.hops, self.delta + other.delta)

    def __str__(self) -> str:
        return f"({self.scalar}, {self.hops}, {self.delta})"


class _Infinity:
    """Distance of an unreachable vertex; larger than every finite weight."""

    _instance: _Infinity | None = None

    def __new__(cls) -> _Infinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("INFINITY")

    def __add__(self, other: object) -> Any:
        raise InvariantBreach("The infinite distance cannot take part in an addition")

    __radd__ = __add__

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


def lift(tail: int, head: int, scalar: Fraction | int | str) -> LiftedWeight:
    value = as_fraction(scalar)
    if value < 0:
        raise InvalidWeight(f"Negative weight {value} on edge {tail}->{head}")
    return LiftedWeight(value, 1, head - tail)


def compare_lifted(a: LiftedWeight, b: LiftedWeight) -> Ordering:
    return Ordering.of(a, b)


class LiftedKind:
    """Real (rational) edge weights carried as lifted triples."""

    name = "real"

    def zero(self) -> LiftedWeight:
        return LiftedWeight(Fraction(0))

    def lift(self, tail: int, head: int, atom: Fraction | int | str) -> LiftedWeight:
        return lift(tail, head, atom)

    def add_edge_batch(self, base: LiftedWeight, edges: Sequence[LiftedWeight]) -> LiftedWeight:
        total = base
        for edge in edges:
            total = total + edge
        return total

    def compare(self, a: LiftedWeight, b: LiftedWeight) -> Ordering:
        return compare_lifted(a, b)

    def prepare(self, groups: Sequence[Sequence[LiftedWeight]]) -> None:
        return None

    def render(self, weight: LiftedWeight) -> str:
        return f"{weight.scalar.numerator} {weight.scalar.denominator}"
