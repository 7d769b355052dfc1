from tradeoff_sssp.core.exotic.binary import BinKind, bin_value
from tradeoff_sssp.core.exotic.lex import LexKind, compress_labels, lex_value
from tradeoff_sssp.core.exotic.normalize import normalize_exponents
from tradeoff_sssp.core.exotic.sssp import (
    BinaryInstance,
    binary_depth,
    binary_sssp,
    build_binary_graph,
    build_lex_graph,
    decoded,
    lex_bottleneck_sssp,
    original_distances,
)
from tradeoff_sssp.core.exotic.treestore import KEEP, DepthExceeded, PrefixNode, TreeNode, TreeStore, Witness
from tradeoff_sssp.core.exotic.weight import ExoticKind, ExoticWeight, InvalidAtom

__all__ = [
    "KEEP",
    "BinKind",
    "BinaryInstance",
    "DepthExceeded",
    "ExoticKind",
    "ExoticWeight",
    "InvalidAtom",
    "LexKind",
    "PrefixNode",
    "TreeNode",
    "TreeStore",
    "Witness",
    "bin_value",
    "binary_depth",
    "binary_sssp",
    "build_binary_graph",
    "build_lex_graph",
    "compress_labels",
    "decoded",
    "lex_bottleneck_sssp",
    "lex_value",
    "normalize_exponents",
    "original_distances",
]
