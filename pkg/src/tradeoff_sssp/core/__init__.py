from tradeoff_sssp.core.basic import basic_sssp
from tradeoff_sssp.core.dense import dense_sssp
from tradeoff_sssp.core.dijkstra import dijkstra_sssp
from tradeoff_sssp.core.graph import Digraph
from tradeoff_sssp.core.minratio import RatioState, empty_state, insert_edge
from tradeoff_sssp.core.nearest import all_t_nearest, t_nearest_from
from tradeoff_sssp.core.nearlists import preprocess_near_lists
from tradeoff_sssp.core.result import SsspResult
from tradeoff_sssp.core.runtime import Runtime, get_runtime
from tradeoff_sssp.core.sparse import sparse_sssp
from tradeoff_sssp.core.weights import INFINITY, LiftedKind, LiftedWeight, lift

__all__ = [
    "INFINITY",
    "Digraph",
    "LiftedKind",
    "LiftedWeight",
    "RatioState",
    "Runtime",
    "SsspResult",
    "all_t_nearest",
    "basic_sssp",
    "dense_sssp",
    "dijkstra_sssp",
    "empty_state",
    "get_runtime",
    "insert_edge",
    "lift",
    "preprocess_near_lists",
    "sparse_sssp",
    "t_nearest_from",
]
