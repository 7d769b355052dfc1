"""Near-lists from synchronized truncated Dijkstra runs.

Every light vertex ``u`` runs Dijkstra on ``G - Z`` for ``t`` iterations, one
extraction per iteration, all runs in lock step. The key of ``y`` in the queue
of ``u`` is the minimum of ``d_x + w(x, y)`` over light ``x`` already in
``NL(u)``; each such contribution is stored per ``(u, y)`` so that a tail
turning heavy can be withdrawn and the key falls back to the next one.

After every iteration the appearance counters are summed at a barrier: a light
vertex that now sits in at least ``p`` lists, its own included, becomes heavy,
is purged from all queues and contributions, and its own run stops. With
``p = 1`` every vertex is heavy before the first iteration.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from sortedcontainers import SortedList

from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.runtime import Runtime, get_runtime
from tradeoff_sssp.core.weights import InvalidParameter

logger = logging.getLogger(__name__)


@dataclass
class NearListTable:
    t: int
    p: int
    lists: dict[int, list[tuple[int, Any]]]
    inverse: dict[int, set[int]]
    appearances: dict[int, int]
    heavy: set[int]
    initial_heavy: frozenset[int] = field(default_factory=frozenset)

    def near_list(self, u: int) -> list[tuple[int, Any]]:
        return self.lists.get(u, [])

    def members(self, u: int) -> list[int]:
        return [v for v, _ in self.lists.get(u, [])]

    def distance(self, u: int, v: int) -> Any | None:
        for vertex, d in self.lists.get(u, []):
            if vertex == v:
                return d
        return None


class _Run:
    """State of one truncated Dijkstra run, owned by the task that advances it."""

    __slots__ = ("contrib", "found", "in_list", "queue", "root")

    def __init__(self, root: int, zero: Any) -> None:
        self.root = root
        self.found: list[tuple[int, Any]] = [(root, zero)]
        self.in_list: set[int] = {root}
        self.queue: SortedList = SortedList()
        self.contrib: dict[int, SortedList] = {}

    def offer(self, head: int, value: Any, tail: int) -> None:
        entries = self.contrib.get(head)
        if entries is None:
            entries = self.contrib[head] = SortedList()
        old = entries[0][0] if entries else None
        entries.add((value, tail))
        if old is None:
            self.queue.add((value, head))
        elif value < old:
            self.queue.remove((old, head))
            self.queue.add((value, head))

    def withdraw(self, head: int, tail: int) -> None:
        entries = self.contrib.get(head)
        if not entries:
            return
        old = entries[0][0]
        survivors = [(value, src) for value, src in entries if src != tail]
        if len(survivors) == len(entries):
            return
        self.queue.remove((old, head))
        if survivors:
            self.contrib[head] = SortedList(survivors)
            self.queue.add((survivors[0][0], head))
        else:
            del self.contrib[head]

    def drop(self, head: int) -> None:
        entries = self.contrib.pop(head, None)
        if entries:
            self.queue.remove((entries[0][0], head))


def _relax(g: Digraph, run: _Run, tail: int, base: Any, heavy: set[int] | frozenset[int]) -> list[int]:
    """Offer the out-edges of ``tail``; returns the heads that received a contribution."""
    touched: list[int] = []
    for head, weight in g.out_edges(tail):
        if head in heavy or head in run.in_list:
            continue
        run.offer(head, g.kind.add_edge_batch(base, [weight]), tail)
        touched.append(head)
    return touched


def heavy_limit(n: int, t: int, p: int) -> int:
    """Most heavy vertices a table may carry: promotions need ``p`` of at most ``n (t + 1)`` slots."""
    return (t + 1) * n // p + 1


def _synchronize(
    g: Digraph,
    t: int,
    p: int,
    roots: list[int],
    heavy: set[int],
    appearances: dict[int, int],
    runtime: Runtime,
) -> dict[int, _Run]:
    """Advance one run per root in lock step; promotions update ``heavy`` and ``appearances`` in place."""
    zero = g.kind.zero()
    seeded = frozenset(heavy)
    runs = {u: _Run(u, zero) for u in roots}
    contributed_by: dict[int, set[tuple[int, int]]] = defaultdict(set)
    active = [u for u in roots if u not in heavy]

    def seed(u: int) -> list[int]:
        return _relax(g, runs[u], u, zero, seeded)

    for u, heads in zip(active, runtime.par_map(active, seed, cost=lambda u: g.outdeg(u) + 1)):
        for head in heads:
            contributed_by[u].add((u, head))

    for iteration in range(t):
        current_heavy = frozenset(heavy)

        def advance(u: int, frozen: frozenset[int] = current_heavy) -> tuple[int, list[int]] | None:
            run = runs[u]
            if not run.queue:
                return None
            key, y = run.queue.pop(0)
            del run.contrib[y]
            run.found.append((y, key))
            run.in_list.add(y)
            return y, _relax(g, run, y, key, frozen)

        stepping = [u for u in active if runs[u].queue]
        if not stepping:
            break
        outcomes = runtime.par_map(stepping, advance, cost=lambda u: g.outdeg(u) + 1)

        touched: set[int] = set()
        for u, outcome in zip(stepping, outcomes):
            if outcome is None:
                continue
            y, heads = outcome
            appearances[y] += 1
            touched.add(y)
            for head in heads:
                contributed_by[y].add((u, head))

        promoted = sorted(v for v in touched if appearances[v] + 1 >= p and v not in heavy)
        runtime.charge(work=len(stepping), depth=1)
        if not promoted:
            continue
        heavy.update(promoted)
        promoted_set = set(promoted)

        purge: dict[int, list[tuple[str, int, int]]] = defaultdict(list)
        for h in promoted:
            for u, head in contributed_by.pop(h, set()):
                purge[u].append(("withdraw", head, h))
        for u in active:
            if u in promoted_set:
                continue
            for h in promoted:
                if h in runs[u].contrib:
                    purge[u].append(("drop", h, h))

        def apply(u: int) -> None:
            run = runs[u]
            for action, head, tail in purge[u]:
                if action == "drop":
                    run.drop(head)
                elif head not in promoted_set:
                    run.withdraw(head, tail)

        targets = sorted(u for u in purge if u not in promoted_set)
        runtime.par_map(targets, apply, cost=lambda u: len(purge[u]))
        active = [u for u in active if u not in promoted_set]
        logger.debug("Near-lists iteration %d: %d new heavy, %d active runs", iteration + 1, len(promoted), len(active))
    return runs


def compute_near_lists(
    g: Digraph,
    t: int,
    p: int,
    initial_heavy: Iterable[int] | None = None,
    runtime: Runtime | None = None,
) -> NearListTable:
    """Run the synchronized procedure with heavy threshold ``p >= 1``.

    ``initial_heavy`` defaults to ``{s}``; the source is always heavy.
    """
    if t < 1:
        raise InvalidParameter(f"t must be at least 1, got {t}")
    if p < 1:
        raise InvalidParameter(f"p must be at least 1, got {p}")
    runtime = runtime or get_runtime()
    heavy: set[int] = set(initial_heavy) if initial_heavy is not None else set()
    heavy.add(g.source)
    heavy &= set(g.vertices)
    seeded = frozenset(heavy)

    # lists other than the vertex's own
    appearances: dict[int, int] = dict.fromkeys(g.vertices, 0)
    if p == 1:
        heavy.update(g.vertices)
    runs = _synchronize(g, t, p, g.vertices, heavy, appearances, runtime)

    lists = {u: run.found for u, run in runs.items()}
    inverse: dict[int, set[int]] = defaultdict(set)
    for u, entries in lists.items():
        for v, _ in entries:
            inverse[v].add(u)
    runtime.charge(work=sum(len(entries) for entries in lists.values()), depth=1)
    return NearListTable(
        t=t,
        p=p,
        lists=lists,
        inverse=dict(inverse),
        appearances=appearances,
        heavy=heavy,
        initial_heavy=seeded,
    )


def preprocess_near_lists(g: Digraph, t: int, p: int, runtime: Runtime | None = None) -> NearListTable:
    """Near-lists for a degree-bounded graph, heavy threshold ``p`` in ``[2, n]``."""
    if p < 2:
        raise InvalidParameter(f"p must be at least 2, got {p}")
    table = compute_near_lists(g, t, p, runtime=runtime)
    logger.info("Near-lists: n=%d t=%d p=%d heavy=%d", g.n, t, p, len(table.heavy))
    return table


def refresh_near_lists(
    g: Digraph,
    table: NearListTable,
    contracted: Iterable[int],
    runtime: Runtime | None = None,
) -> NearListTable:
    """Near-lists for ``g`` after ``contracted`` was merged into the source.

    A list that never met a contracted vertex keeps its entries: removing
    vertices only lengthens paths and the new source edges end in a heavy
    tail. The heavy set carries over and only the stale roots rerun the
    synchronized procedure, starting from the counters of the kept lists.
    When the heavy set outgrows :func:`heavy_limit` the table is rebuilt.
    ``table`` is left untouched.
    """
    runtime = runtime or get_runtime()
    t, p = table.t, table.p
    zero = g.kind.zero()
    gone = {x for x in contracted if not g.has_vertex(x)}

    stale: set[int] = set()
    for x in gone:
        stale |= table.inverse.get(x, set())
    stale = {u for u in stale if g.has_vertex(u)}
    heavy = {z for z in table.heavy if g.has_vertex(z)} | {g.source}
    carried = frozenset(heavy)

    lists = {u: entries for u, entries in table.lists.items() if g.has_vertex(u)}
    inverse = {v: owners for v, owners in table.inverse.items() if g.has_vertex(v)}
    appearances = {v: count for v, count in table.appearances.items() if g.has_vertex(v)}
    copied: set[int] = set()

    def forget(owner: int, entries: list[tuple[int, Any]]) -> None:
        for v, _ in entries:
            if v not in inverse:
                continue
            if v not in copied:
                inverse[v] = set(inverse[v])
                copied.add(v)
            inverse[v].discard(owner)
            if v != owner:
                appearances[v] -= 1

    for x in gone:
        forget(x, table.lists.get(x, []))
    for u in stale:
        forget(u, lists[u])
        lists[u] = [(u, zero)]
    runtime.charge(work=len(gone) + len(stale) * (t + 1), depth=1)

    roots = sorted(u for u in stale if u not in heavy)
    runs = _synchronize(g, t, p, roots, heavy, appearances, runtime)
    for u in stale:
        if u in runs:
            lists[u] = runs[u].found
        for v, _ in lists[u]:
            if v not in copied:
                inverse[v] = set(inverse.get(v, set()))
                copied.add(v)
            inverse[v].add(u)
    runtime.charge(work=sum(len(lists[u]) for u in stale), depth=1)

    if len(heavy) > heavy_limit(g.n, t, p):
        logger.debug("Near-lists refresh: %d heavy > %d, rebuilding", len(heavy), heavy_limit(g.n, t, p))
        return compute_near_lists(g, t, p, runtime=runtime)
    logger.debug("Near-lists refresh: n=%d stale=%d heavy=%d", g.n, len(stale), len(heavy))
    return NearListTable(
        t=t,
        p=p,
        lists=lists,
        inverse=inverse,
        appearances=appearances,
        heavy=heavy,
        initial_heavy=carried,
    )
