from collections.abc import Callable, Sequence
from typing import Any, Protocol


class ExecutionBackend(Protocol):
    name: str

    def run(self, calls: Sequence[Callable[[], Any]]) -> list[Any]: ...
