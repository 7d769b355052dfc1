"""Round-structured execution with exact work/depth accounting.

Parallel code is written against :class:`Runtime`: a round is one
``par_map`` whose tasks only read shared state and return their results;
everything they produce is merged by the caller after the barrier. Counters
are a pure function of the round structure, so the sequential interpreter and
the thread pool report identical numbers.
"""

from __future__ import annotations

import contextvars
import logging
import os
import threading
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, TypeVar, cast

from tradeoff_sssp.core.ports.backend import ExecutionBackend
from tradeoff_sssp.core.weights import InvalidParameter

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

_MISSING: Any = object()


class EmptyReduce(ValueError):
    """Raised when reducing an empty sequence without an identity element."""


def ceil_log2(value: int) -> int:
    return max(0, (value - 1).bit_length())


@dataclass(frozen=True)
class Counters:
    work: int = 0
    depth: int = 0

    def __sub__(self, other: Counters) -> Counters:
        return Counters(self.work - other.work, self.depth - other.depth)


class _Frame:
    __slots__ = ("depth", "owner", "work")

    def __init__(self, owner: Runtime) -> None:
        self.owner = owner
        self.work = 0
        self.depth = 0


_FRAME: contextvars.ContextVar[_Frame | None] = contextvars.ContextVar("tradeoff_sssp_frame", default=None)


class SequentialBackend:
    name = "seq"

    def run(self, calls: Sequence[Callable[[], Any]]) -> list[Any]:
        return [call() for call in calls]


class ThreadPoolBackend:
    """Runs the tasks of a round on a shared thread pool.

    Rounds started from inside a worker run inline; blocking a worker on its
    own pool could starve it.
    """

    name = "par"

    def __init__(self, max_workers: int | None = None) -> None:
        self._max_workers = max_workers
        self._executor: ThreadPoolExecutor | None = None
        self._lock = threading.Lock()
        self._local = threading.local()

    def _pool(self) -> ThreadPoolExecutor:
        with self._lock:
            if self._executor is None:
                self._executor = ThreadPoolExecutor(
                    max_workers=self._max_workers, thread_name_prefix="tradeoff-sssp"
                )
            return self._executor

    def _in_worker(self, call: Callable[[], Any]) -> Any:
        self._local.inside = True
        try:
            return call()
        finally:
            self._local.inside = False

    def run(self, calls: Sequence[Callable[[], Any]]) -> list[Any]:
        if len(calls) <= 1 or getattr(self._local, "inside", False):
            return [call() for call in calls]
        return list(self._pool().map(self._in_worker, calls))

    def shutdown(self) -> None:
        with self._lock:
            if self._executor is not None:
                self._executor.shutdown(wait=True)
                self._executor = None


class Runtime:
    def __init__(self, backend: ExecutionBackend | None = None) -> None:
        self.backend: ExecutionBackend = backend or SequentialBackend()
        self._root = _Frame(self)

    def _frame(self) -> _Frame:
        frame = _FRAME.get()
        if frame is None or frame.owner is not self:
            return self._root
        return frame

    @property
    def counters(self) -> Counters:
        return Counters(self._root.work, self._root.depth)

    def charge(self, work: int = 0, depth: int = 0) -> None:
        frame = self._frame()
        frame.work += work
        frame.depth += depth

    def charge_batch(self, count: int, size: int) -> None:
        """Account for ``count`` edits on ordered maps holding up to ``size`` keys."""
        if count <= 0:
            return
        levels = ceil_log2(max(size, 2))
        self.charge(work=count * levels, depth=1 + levels)

    def par_map(
        self,
        items: Sequence[T],
        fn: Callable[[T], R],
        cost: int | Callable[[T], int] = 1,
    ) -> list[R]:
        if not items:
            return []

        def task(item: T) -> Callable[[], tuple[R | None, BaseException | None, _Frame]]:
            def call() -> tuple[R | None, BaseException | None, _Frame]:
                frame = _Frame(self)
                _FRAME.set(frame)
                try:
                    return fn(item), None, frame
                except Exception as exc:
                    return None, exc, frame

            ctx = contextvars.copy_context()
            return lambda: ctx.run(call)

        outcomes = self.backend.run([task(item) for item in items])

        base = sum(cost(item) for item in items) if callable(cost) else cost * len(items)
        inner_work = sum(frame.work for _, _, frame in outcomes)
        inner_depth = max(frame.depth for _, _, frame in outcomes)
        self.charge(work=base + inner_work, depth=1 + inner_depth)

        for _, error, _ in outcomes:
            if error is not None:
                raise error
        return [cast(R, value) for value, _, _ in outcomes]

    def par_reduce(self, items: Sequence[T], op: Callable[[T, T], T], identity: T = _MISSING) -> T:
        if not items:
            if identity is _MISSING:
                raise EmptyReduce("Cannot reduce an empty sequence without an identity")
            return identity
        level: list[T] = list(items)
        while len(level) > 1:
            paired = [op(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                paired.append(level[-1])
            level = paired
        self.charge(work=len(items), depth=ceil_log2(len(items)))
        return level[0]


def get_runtime(backend: str | None = None, workers: int | None = None) -> Runtime:
    """Build a runtime from explicit arguments or the environment.

    ``TRADEOFF_SSSP_BACKEND`` selects ``seq`` (default) or ``par``;
    ``TRADEOFF_SSSP_WORKERS`` sizes the thread pool.
    """
    choice = (backend or os.getenv("TRADEOFF_SSSP_BACKEND", "seq")).strip().lower()
    if workers is None and (raw := os.getenv("TRADEOFF_SSSP_WORKERS")):
        try:
            workers = int(raw)
        except ValueError as exc:
            raise InvalidParameter(f"TRADEOFF_SSSP_WORKERS must be an integer, got {raw!r}") from exc
    if choice == "seq":
        return Runtime(SequentialBackend())
    if choice == "par":
        logger.debug("Using thread-pool backend with %s workers", workers or "default")
        return Runtime(ThreadPoolBackend(workers))
    raise InvalidParameter(f"Unknown backend {choice!r}; expected 'seq' or 'par'")


def reduce_min(runtime: Runtime, items: Iterable[Any]) -> Any:
    return runtime.par_reduce(list(items), lambda a, b: b if b < a else a)
