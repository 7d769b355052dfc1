"""Weights that are linear functions of an unknown parameter.

A :class:`LinearWeight` is ``a + b * lam`` for a hidden ``lam*``; comparing two of
them asks for the sign of a degree-one polynomial just above ``lam*``. The
:class:`ParametricResolver` answers such questions with a monotone decision
procedure ``decide(lam) = lam <= lam*`` and remembers the tightest known
bounds, so a whole round of comparisons can be settled with a binary search
over their sorted roots.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from functools import total_ordering

from tradeoff_sssp.core.weights import Ordering

logger = logging.getLogger(__name__)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


class ParametricResolver:
    def __init__(self, decide: Callable[[Fraction], bool]) -> None:
        self._decide = decide
        self.lower: Fraction | None = None
        self.upper: Fraction | None = None
        self.decisions = 0
        self._lock = threading.RLock()

    def _record(self, root: Fraction, below: bool) -> None:
        if below:
            if self.lower is None or root > self.lower:
                self.lower = root
        elif self.upper is None or root < self.upper:
            self.upper = root

    def _known(self, root: Fraction) -> bool | None:
        if self.lower is not None and root <= self.lower:
            return True
        if self.upper is not None and root >= self.upper:
            return False
        return None

    def at_or_below(self, root: Fraction) -> bool:
        """Whether ``root <= lam*``."""
        with self._lock:
            known = self._known(root)
            if known is not None:
                return known
            self.decisions += 1
            below = self._decide(root)
            self._record(root, below)
            return below

    def sign(self, a: Fraction, b: Fraction) -> int:
        """Sign of ``a + b * lam`` at ``lam* + eps``."""
        if b == 0:
            return _sign(a)
        root = -a / b
        return _sign(b) if self.at_or_below(root) else -_sign(b)

    def resolve_roots(self, roots: Iterable[Fraction]) -> None:
        """Settle every root of a round with ``O(log k)`` decisions."""
        with self._lock:
            pending = sorted({root for root in roots if self._known(root) is None})
            if not pending:
                return
            lo, hi = 0, len(pending)
            while lo < hi:
                mid = (lo + hi) // 2
                self.decisions += 1
                if self._decide(pending[mid]):
                    lo = mid + 1
                else:
                    hi = mid
            if lo > 0:
                self._record(pending[lo - 1], True)
            if lo < len(pending):
                self._record(pending[lo], False)
            logger.debug("Resolved %d roots, lam* in (%s, %s)", len(pending), self.lower, self.upper)


@total_ordering
class LinearWeight:
    __slots__ = ("a", "b", "delta", "hops", "resolver")

    def __init__(self, a: Fraction, b: Fraction, hops: int, delta: int, resolver: ParametricResolver) -> None:
        self.a = a
        self.b = b
        self.hops = hops
        self.delta = delta
        self.resolver = resolver

    def value(self, lam: Fraction) -> Fraction:
        return self.a + self.b * lam

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearWeight):
            return NotImplemented
        return (self.a, self.b, self.hops, self.delta) == (other.a, other.b, other.hops, other.delta)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.hops, self.delta))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, LinearWeight):
            return NotImplemented
        order = self.resolver.sign(self.a - other.a, self.b - other.b)
        if order != 0:
            return order < 0
        return (self.hops, self.delta) < (other.hops, other.delta)

    def __add__(self, other: LinearWeight) -> LinearWeight:
        if not isinstance(other, LinearWeight):
            return NotImplemented
        return LinearWeight(
            self.a + other.a, self.b + other.b, self.hops + other.hops, self.delta + other.delta, self.resolver
        )

    def __repr__(self) -> str:
        return f"LinearWeight({self.a} + {self.b}*lam, hops={self.hops}, delta={self.delta})"


class LinearKind:
    name = "linear"

    def __init__(self, resolver: ParametricResolver) -> None:
        self.resolver = resolver

    def zero(self) -> LinearWeight:
        return LinearWeight(Fraction(0), Fraction(0), 0, 0, self.resolver)

    def lift(self, tail: int, head: int, atom: tuple[Fraction, Fraction]) -> LinearWeight:
        a, b = atom
        return LinearWeight(Fraction(a), Fraction(b), 1, head - tail, self.resolver)

    def add_edge_batch(self, base: LinearWeight, edges: Sequence[LinearWeight]) -> LinearWeight:
        total = base
        for edge in edges:
            total = total + edge
        return total

    def compare(self, a: LinearWeight, b: LinearWeight) -> Ordering:
        return Ordering.of(a, b)

    def prepare(self, groups: Sequence[Sequence[LinearWeight]]) -> None:
        roots: list[Fraction] = []
        for group in groups:
            lines = sorted({(w.a, w.b) for w in group})
            for i, (a1, b1) in enumerate(lines):
                for a2, b2 in lines[i + 1 :]:
                    if b1 != b2:
                        roots.append((a2 - a1) / (b1 - b2))
        self.resolver.resolve_roots(roots)

    def render(self, weight: LinearWeight) -> str:
        return f"{weight.a} {weight.b}"
