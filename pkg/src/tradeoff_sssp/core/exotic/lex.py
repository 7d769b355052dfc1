"""Multisets of edge labels under the lexicographic bottleneck order.

A multiset over ``[0, 2^b)`` is a full binary tree whose leaf at depth ``b``
for value ``v`` carries the multiplicity of ``v`` as its color; subtrees with
no elements are pruned. The most significant value bit chooses the child
(``1`` goes left), so the first mismatch found by a left-first descent sits at
the largest value where the multisets differ.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Sequence

from tradeoff_sssp.core.exotic.treestore import KEEP, Child, PrefixNode, TreeStore
from tradeoff_sssp.core.exotic.weight import ExoticKind, ExoticWeight, InvalidAtom
from tradeoff_sssp.core.runtime import ceil_log2

logger = logging.getLogger(__name__)


def compress_labels(labels: Iterable[int]) -> dict[int, int]:
    """Order-preserving ranks of the distinct labels."""
    return {label: rank for rank, label in enumerate(sorted(set(labels)))}


class LexKind(ExoticKind):
    name = "lex"

    def __init__(self, m: int, labels: Sequence[int] | None = None, store: TreeStore | None = None) -> None:
        self.m = max(1, m)
        self.bits = ceil_log2(self.m)
        super().__init__(store or TreeStore(self.bits))
        self.labels = list(labels) if labels is not None else None
        self._empty = self.store.node(0)

    @property
    def empty(self) -> int:
        return self._empty

    def validate_atom(self, atom: int) -> None:
        if not 0 <= atom < self.m:
            raise InvalidAtom(f"Label {atom} outside [0, {self.m})")

    def _bit(self, value: int, depth: int) -> int:
        return (value >> (self.bits - depth - 1)) & 1

    def _prefix(self, tree: int | None, depth: int, counts: list[tuple[int, int]]) -> PrefixNode:
        record = self.store.get(tree) if tree is not None else None
        if depth == self.bits:
            held = record.color if record is not None else 0
            return PrefixNode(held + sum(count for _, count in counts))
        high = [item for item in counts if self._bit(item[0], depth)]
        low = [item for item in counts if not self._bit(item[0], depth)]
        left: Child = KEEP
        right: Child = KEEP
        if high:
            left = self._prefix(record.left if record is not None else None, depth + 1, high)
        if low:
            right = self._prefix(record.right if record is not None else None, depth + 1, low)
        if record is None:
            left = None if left is KEEP else left
            right = None if right is KEEP else right
        return PrefixNode(0, left, right)

    def add_atoms(self, elem: int, atoms: Sequence[int]) -> int:
        if not atoms:
            return elem
        for atom in atoms:
            self.validate_atom(atom)
        counts = sorted(Counter(atoms).items())
        return self.store.replace_prefix(elem, self._prefix(elem, 0, counts))

    def from_values(self, values: Iterable[int]) -> int:
        return self.add_atoms(self.empty, list(values))

    def decode(self, elem: int) -> tuple[int, ...]:
        """Elements in descending order, with repetition."""
        out: list[int] = []

        def walk(tree: int | None, depth: int, prefix: int) -> None:
            if tree is None:
                return
            record = self.store.get(tree)
            if depth == self.bits:
                out.extend([prefix] * record.color)
                return
            walk(record.left, depth + 1, prefix * 2 + 1)
            walk(record.right, depth + 1, prefix * 2)

        walk(elem, 0, 0)
        return tuple(out)

    def original_labels(self, elem: int) -> tuple[int, ...]:
        ranks = self.decode(elem)
        if self.labels is None:
            return ranks
        return tuple(self.labels[rank] for rank in ranks)

    def render(self, weight: ExoticWeight) -> str:
        labels = self.original_labels(weight.elem)
        return ",".join(str(label) for label in labels) if labels else "-"


def lex_value(kind: LexKind, weight: ExoticWeight) -> tuple[int, ...]:
    return kind.decode(weight.elem)
