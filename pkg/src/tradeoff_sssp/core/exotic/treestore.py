"""Hash-consed colored binary trees.

Every stored node is a triple ``(color, left, right)`` of a color and two
optional child identifiers. The dictionary ``mu`` maps each triple to its
identifier, so two identifiers are equal exactly when their colored subtrees
are isomorphic, and a new version of a tree shares every untouched subtree
with the old one.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from typing import Final, TypeAlias

logger = logging.getLogger(__name__)


class DepthExceeded(ValueError):
    """Raised when a tree would grow deeper than the store's depth bound."""


@dataclass(frozen=True)
class TreeNode:
    color: int
    left: int | None = None
    right: int | None = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


class _Keep:
    _instance: _Keep | None = None

    def __new__(cls) -> _Keep:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "KEEP"


# Reuse the original tree's child at this position (absent stays absent).
KEEP: Final = _Keep()

Child: TypeAlias = "PrefixNode | int | _Keep | None"


@dataclass(frozen=True)
class PrefixNode:
    """A node of a replacement prefix.

    Children are further prefix nodes, existing tree identifiers, ``KEEP`` or
    ``None`` for an absent child.
    """

    color: int
    left: Child = None
    right: Child = None


@dataclass(frozen=True)
class Witness:
    """First mismatch of a single-descent comparison.

    ``label`` is the path from the root (``L``/``R`` per step); ``first`` and
    ``second`` are the subtrees found there, ``None`` when absent.
    """

    label: str
    first: int | None
    second: int | None


class TreeStore:
    def __init__(self, depth_bound: int) -> None:
        if depth_bound < 0:
            raise DepthExceeded(f"Depth bound must be non-negative, got {depth_bound}")
        self.depth_bound = depth_bound
        self._mu: dict[TreeNode, int] = {}
        self._nodes: list[TreeNode] = []
        self._heights: list[int] = []
        self._lock = threading.RLock()

    @property
    def lock(self) -> threading.RLock:
        return self._lock

    def __len__(self) -> int:
        return len(self._nodes)

    def get(self, tree: int) -> TreeNode:
        return self._nodes[tree]

    def height(self, tree: int) -> int:
        return self._heights[tree]

    def node(self, color: int, left: int | None = None, right: int | None = None) -> int:
        record = TreeNode(color, left, right)
        with self._lock:
            found = self._mu.get(record)
            if found is not None:
                return found
            height = 1 + max(self._heights[c] for c in (left, right) if c is not None) if not record.is_leaf else 0
            if height > self.depth_bound:
                raise DepthExceeded(f"Tree of height {height} exceeds the depth bound {self.depth_bound}")
            ident = len(self._nodes)
            self._nodes.append(record)
            self._heights.append(height)
            self._mu[record] = ident
            return ident

    def leaf(self, color: int) -> int:
        return self.node(color)

    def leaves(self, colors: list[int]) -> list[int]:
        """Create a batch of one-node trees; equal colors share one identifier."""
        with self._lock:
            return [self.node(color) for color in colors]

    def child_at(self, tree: int, label: str) -> int | None:
        current: int | None = tree
        for step in label:
            if current is None:
                return None
            record = self._nodes[current]
            current = record.left if step == "L" else record.right
        return current

    def replace_prefix(self, tree: int, prefix: PrefixNode) -> int:
        """Return the tree that equals ``prefix`` on its nodes and ``tree`` below ``KEEP`` markers.

        Nodes are named level by level from the deepest one up; triples that
        occur several times on a level receive one identifier.
        """
        levels: list[list[tuple[str, PrefixNode]]] = []
        stack: list[tuple[str, PrefixNode]] = [("", prefix)]
        while stack:
            label, node = stack.pop()
            while len(levels) <= len(label):
                levels.append([])
            levels[len(label)].append((label, node))
            for step, child in (("L", node.left), ("R", node.right)):
                if isinstance(child, PrefixNode):
                    stack.append((label + step, child))

        named: dict[str, int] = {}

        def resolve(label: str, child: Child) -> int | None:
            if child is None:
                return None
            if isinstance(child, PrefixNode):
                return named[label]
            if isinstance(child, _Keep):
                return self.child_at(tree, label)
            return child

        with self._lock:
            for depth in range(len(levels) - 1, -1, -1):
                triples = []
                for label, node in levels[depth]:
                    left = resolve(label + "L", node.left)
                    right = resolve(label + "R", node.right)
                    below = [self._heights[c] for c in (left, right) if c is not None]
                    if below and depth + 1 + max(below) > self.depth_bound:
                        raise DepthExceeded(
                            f"Replacing at depth {depth} gives height {depth + 1 + max(below)} > {self.depth_bound}"
                        )
                    triples.append((label, TreeNode(node.color, left, right)))
                for label, record in sorted(triples, key=lambda item: item[0]):
                    named[label] = self.node(record.color, record.left, record.right)
        return named[""]

    def compare(self, a: int, b: int) -> Witness | None:
        """Descend to the first mismatch; ``None`` when the trees are equal."""
        if a == b:
            return None
        label = ""
        x, y = a, b
        while True:
            nx, ny = self._nodes[x], self._nodes[y]
            if nx.color != ny.color:
                return Witness(label, x, y)
            if nx.left != ny.left:
                if nx.left is None or ny.left is None:
                    return Witness(label + "L", nx.left, ny.left)
                x, y, label = nx.left, ny.left, label + "L"
                continue
            if nx.right is None or ny.right is None:
                return Witness(label + "R", nx.right, ny.right)
            x, y, label = nx.right, ny.right, label + "R"

    def materialize(self, tree: int) -> tuple[int, object, object]:
        """Expand an identifier into nested ``(color, left, right)`` tuples."""
        record = self._nodes[tree]
        left = self.materialize(record.left) if record.left is not None else None
        right = self.materialize(record.right) if record.right is not None else None
        return record.color, left, right
