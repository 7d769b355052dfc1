from __future__ import annotations

from collections.abc import Sequence
from typing import Any, Protocol

from tradeoff_sssp.core.weights import Ordering


class Weight(Protocol):
    """An element of an ordered commutative monoid.

    Algorithms only add and compare weights; the concrete kind decides what
    an element looks like.
    """

    def __add__(self, other: Any) -> Any: ...

    def __lt__(self, other: Any) -> bool: ...

    def __le__(self, other: Any) -> bool: ...

    def __eq__(self, other: object) -> bool: ...

    def __hash__(self) -> int: ...


class WeightKind(Protocol):
    name: str

    def zero(self) -> Any: ...

    def lift(self, tail: int, head: int, atom: Any) -> Any: ...

    def add_edge_batch(self, base: Any, edges: Sequence[Any]) -> Any: ...

    def compare(self, a: Any, b: Any) -> Ordering: ...

    def prepare(self, groups: Sequence[Sequence[Any]]) -> None: ...

    def render(self, weight: Any) -> str: ...
