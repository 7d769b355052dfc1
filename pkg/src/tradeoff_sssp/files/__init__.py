from tradeoff_sssp.files.distances import (
    DistanceDiff,
    compare_distances,
    format_distances,
    parse_distances,
    read_distances,
    write_distances,
)
from tradeoff_sssp.files.graph_file import InputError, format_graph, parse_graph, read_graph, write_graph
from tradeoff_sssp.files.ratio_script import Insertion, parse_ratio_script, read_ratio_script

__all__ = [
    "DistanceDiff",
    "InputError",
    "Insertion",
    "compare_distances",
    "format_distances",
    "format_graph",
    "parse_distances",
    "parse_graph",
    "parse_ratio_script",
    "read_distances",
    "read_graph",
    "read_ratio_script",
    "write_distances",
    "write_graph",
]
