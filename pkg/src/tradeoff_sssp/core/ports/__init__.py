from tradeoff_sssp.core.ports.backend import ExecutionBackend
from tradeoff_sssp.core.ports.observer import DiscoveryObserver
from tradeoff_sssp.core.ports.weight_kind import Weight, WeightKind

__all__ = ["DiscoveryObserver", "ExecutionBackend", "Weight", "WeightKind"]
