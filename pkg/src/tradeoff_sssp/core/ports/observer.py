from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

if TYPE_CHECKING:
    from tradeoff_sssp.core.result import DiscoveryStep


class DiscoveryObserver(Protocol):
    def __call__(self, step: DiscoveryStep) -> None: ...
