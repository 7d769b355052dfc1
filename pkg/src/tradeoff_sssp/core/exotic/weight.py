"""Monoid elements stored as persistent trees.

An :class:`ExoticWeight` pairs a tree identifier with the lifted tie-breaking
coordinates (hop count and label delta). Distances built from at most ``t``
edges also remember their edge atoms, so that the kind can re-apply them as
one batch; longer sums (edges out of the source after a contraction) only ever
appear as the left operand of an addition and drop their atoms.
"""

from __future__ import annotations

import abc
import threading
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from functools import total_ordering
from typing import Any

from tradeoff_sssp.core.exotic.treestore import TreeStore
from tradeoff_sssp.core.weights import InvariantBreach, Ordering


class InvalidAtom(ValueError):
    """Raised when an edge atom is outside the range the weight kind supports."""


@total_ordering
class ExoticWeight:
    __slots__ = ("atoms", "delta", "elem", "hops", "kind")

    def __init__(self, kind: ExoticKind, elem: int, atoms: tuple[int, ...] | None, hops: int, delta: int) -> None:
        self.kind = kind
        self.elem = elem
        self.atoms = atoms
        self.hops = hops
        self.delta = delta

    @property
    def is_zero(self) -> bool:
        return self.hops == 0 and self.elem == self.kind.empty

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExoticWeight):
            return NotImplemented
        return (self.elem, self.hops, self.delta) == (other.elem, other.hops, other.delta)

    def __hash__(self) -> int:
        return hash((self.elem, self.hops, self.delta))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExoticWeight):
            return NotImplemented
        order = self.kind.compare_elements(self.elem, other.elem)
        if order != 0:
            return order < 0
        return (self.hops, self.delta) < (other.hops, other.delta)

    def __add__(self, other: ExoticWeight) -> ExoticWeight:
        if not isinstance(other, ExoticWeight):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return self.kind.add_edge_batch(self, [other])

    def __repr__(self) -> str:
        return f"ExoticWeight({self.kind.name}, {self.kind.decode(self.elem)!r}, hops={self.hops}, delta={self.delta})"


class ExoticKind(abc.ABC):
    """Shared plumbing of the tree-backed weight kinds.

    Subclasses provide the empty element, single-atom trees, the batch
    insertion of atoms and a decoder; comparison is common to both: at the
    first mismatch an absent subtree is smaller than a present one, otherwise
    the larger color wins.
    """

    name: str

    def __init__(self, store: TreeStore) -> None:
        self.store = store
        self.atom_limit = 1
        self._budget_lock = threading.Lock()

    @property
    @abc.abstractmethod
    def empty(self) -> int: ...

    @abc.abstractmethod
    def validate_atom(self, atom: int) -> None: ...

    @abc.abstractmethod
    def add_atoms(self, elem: int, atoms: Sequence[int]) -> int: ...

    @abc.abstractmethod
    def decode(self, elem: int) -> Any: ...

    @contextmanager
    def atom_budget(self, limit: int) -> Iterator[None]:
        """Keep atom lists of sums with at most ``limit`` atoms while the block runs."""
        with self._budget_lock:
            previous = self.atom_limit
            self.atom_limit = max(1, limit)
        try:
            yield
        finally:
            with self._budget_lock:
                self.atom_limit = previous

    def compare_elements(self, a: int, b: int) -> int:
        witness = self.store.compare(a, b)
        if witness is None:
            return 0
        if witness.first is None:
            return -1
        if witness.second is None:
            return 1
        first = self.store.get(witness.first).color
        second = self.store.get(witness.second).color
        return -1 if first < second else 1

    def zero(self) -> ExoticWeight:
        return ExoticWeight(self, self.empty, (), 0, 0)

    def lift(self, tail: int, head: int, atom: int) -> ExoticWeight:
        value = int(atom)
        self.validate_atom(value)
        return ExoticWeight(self, self.add_atoms(self.empty, [value]), (value,), 1, head - tail)

    def add_edge_batch(self, base: ExoticWeight, edges: Sequence[ExoticWeight]) -> ExoticWeight:
        if not edges:
            return base
        atoms: list[int] = []
        hops, delta = base.hops, base.delta
        for edge in edges:
            if edge.atoms is None:
                raise InvariantBreach("Right operand of a batch addition has no atom decomposition")
            atoms.extend(edge.atoms)
            hops += edge.hops
            delta += edge.delta
        elem = self.add_atoms(base.elem, atoms)
        kept: tuple[int, ...] | None = None
        if base.atoms is not None and len(base.atoms) + len(atoms) <= self.atom_limit:
            kept = base.atoms + tuple(atoms)
        return ExoticWeight(self, elem, kept, hops, delta)

    def compare(self, a: ExoticWeight, b: ExoticWeight) -> Ordering:
        return Ordering.of(a, b)

    def prepare(self, groups: Sequence[Sequence[ExoticWeight]]) -> None:
        return None

    def render(self, weight: ExoticWeight) -> str:
        return str(self.decode(weight.elem))
