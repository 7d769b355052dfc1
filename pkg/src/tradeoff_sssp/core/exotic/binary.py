"""Sums of powers of two as interval trees over the bit positions.

A number below ``2^(2^b)`` is the tree of the interval ``[0, 2^b)`` of bit
positions: an interval whose bits are all equal is a leaf colored with that
bit, any other interval is an uncolored node whose left child is the upper
(more significant) half. A number with ``k`` set bits has ``O(k b)`` nodes.

Addition runs in two memoized passes over pairs of subtrees: ``carry`` tells
whether a block overflows given an incoming carry, ``sum`` rebuilds the block
top-down with the carries it received. Memoization is keyed on identifiers,
so the work is proportional to the distinct pairs of subtrees visited.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from tradeoff_sssp.core.exotic.treestore import DepthExceeded, TreeNode, TreeStore
from tradeoff_sssp.core.exotic.weight import ExoticKind, ExoticWeight, InvalidAtom

logger = logging.getLogger(__name__)

_INTERNAL = 0


class BinKind(ExoticKind):
    name = "bin"

    def __init__(self, bits: int, store: TreeStore | None = None) -> None:
        if bits < 0:
            raise DepthExceeded(f"Tree depth must be non-negative, got {bits}")
        self.bits = bits
        self.width = 1 << bits
        super().__init__(store or TreeStore(bits))
        self._zero_leaf = self.store.leaf(0)
        self._one_leaf = self.store.leaf(1)
        self._powers: dict[tuple[int, int], int] = {}
        self._carry: dict[tuple[int, int, int, int], int] = {}
        self._sum: dict[tuple[int, int, int, int], int] = {}
        self._units: dict[tuple[int, int], int] = {}

    @property
    def empty(self) -> int:
        return self._zero_leaf

    def validate_atom(self, atom: int) -> None:
        if not 0 <= atom < self.width:
            raise InvalidAtom(f"Exponent {atom} outside [0, {self.width})")

    # ------------------------------------------------------------------
    # Building blocks
    # ------------------------------------------------------------------

    def _join(self, high: int, low: int) -> int:
        upper, lower = self.store.get(high), self.store.get(low)
        if upper.is_leaf and lower.is_leaf and upper.color == lower.color:
            return high
        return self.store.node(_INTERNAL, high, low)

    def _halves(self, tree: int) -> tuple[int, int]:
        record = self.store.get(tree)
        if record.is_leaf:
            return tree, tree
        assert record.left is not None and record.right is not None
        return record.left, record.right

    def _power(self, exponent: int, level: int) -> int:
        """``2^exponent`` inside a block of ``2^level`` bits."""
        key = (exponent, level)
        found = self._powers.get(key)
        if found is not None:
            return found
        if level == 0:
            tree = self._one_leaf
        else:
            half = 1 << (level - 1)
            if exponent >= half:
                tree = self._join(self._power(exponent - half, level - 1), self._zero_leaf)
            else:
                tree = self._join(self._zero_leaf, self._power(exponent, level - 1))
        self._powers[key] = tree
        return tree

    def _low_pattern(self, level: int, low_bit: int) -> int:
        """A block of ones whose lowest bit is ``low_bit``."""
        key = (level, low_bit)
        found = self._units.get(key)
        if found is not None:
            return found
        if level == 0:
            tree = self._one_leaf if low_bit else self._zero_leaf
        else:
            tree = self._join(self._one_leaf, self._low_pattern(level - 1, low_bit))
        self._units[key] = tree
        return tree

    def _unit(self, level: int) -> int:
        return self._power(0, level)

    # ------------------------------------------------------------------
    # Carry and Sum
    # ------------------------------------------------------------------

    def carry(self, x: int, y: int, incoming: int, level: int) -> int:
        key = (x, y, incoming, level)
        found = self._carry.get(key)
        if found is not None:
            return found
        nx, ny = self.store.get(x), self.store.get(y)
        if nx.is_leaf and ny.is_leaf:
            if nx.color and ny.color:
                out = 1
            elif nx.color or ny.color:
                out = incoming
            else:
                out = 0
        else:
            xh, xl = self._halves(x)
            yh, yl = self._halves(y)
            out = self.carry(xh, yh, self.carry(xl, yl, incoming, level - 1), level - 1)
        self._carry[key] = out
        return out

    def _leaf_sum(self, a: TreeNode, b: TreeNode, incoming: int, level: int) -> int:
        if a.color and b.color:
            return self._low_pattern(level, incoming)
        if a.color or b.color:
            return self._zero_leaf if incoming else self._one_leaf
        return self._unit(level) if incoming else self._zero_leaf

    def sum(self, x: int, y: int, incoming: int, level: int) -> int:
        key = (x, y, incoming, level)
        found = self._sum.get(key)
        if found is not None:
            return found
        nx, ny = self.store.get(x), self.store.get(y)
        if nx.is_leaf and ny.is_leaf:
            out = self._leaf_sum(nx, ny, incoming, level)
        else:
            xh, xl = self._halves(x)
            yh, yl = self._halves(y)
            low_carry = self.carry(xl, yl, incoming, level - 1)
            out = self._join(self.sum(xh, yh, low_carry, level - 1), self.sum(xl, yl, incoming, level - 1))
        self._sum[key] = out
        return out

    def add(self, x: int, y: int) -> int:
        with self.store.lock:
            if self.carry(x, y, 0, self.bits):
                raise DepthExceeded(f"Sum does not fit in {self.width} bits")
            return self.sum(x, y, 0, self.bits)

    # ------------------------------------------------------------------
    # Atoms and decoding
    # ------------------------------------------------------------------

    def power(self, exponent: int) -> int:
        self.validate_atom(exponent)
        with self.store.lock:
            return self._power(exponent, self.bits)

    def add_atoms(self, elem: int, atoms: Sequence[int]) -> int:
        if not atoms:
            return elem
        level = [self.power(atom) for atom in atoms]
        while len(level) > 1:
            paired = [self.add(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                paired.append(level[-1])
            level = paired
        return self.add(elem, level[0])

    def from_int(self, value: int) -> int:
        if value < 0 or value.bit_length() > self.width:
            raise DepthExceeded(f"{value} does not fit in {self.width} bits")

        def build(chunk: int, level: int) -> int:
            size = 1 << level
            if chunk == 0:
                return self._zero_leaf
            if chunk == (1 << size) - 1:
                return self._one_leaf
            half = size >> 1
            return self._join(build(chunk >> half, level - 1), build(chunk & ((1 << half) - 1), level - 1))

        with self.store.lock:
            return build(value, self.bits)

    def decode(self, elem: int) -> int:
        def value(tree: int, level: int) -> int:
            record = self.store.get(tree)
            size = 1 << level
            if record.is_leaf:
                return (1 << size) - 1 if record.color else 0
            assert record.left is not None and record.right is not None
            half = size >> 1
            return (value(record.left, level - 1) << half) | value(record.right, level - 1)

        return value(elem, self.bits)


def bin_value(kind: BinKind, weight: ExoticWeight) -> int:
    return kind.decode(weight.elem)
