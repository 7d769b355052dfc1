"""Distances files: one ``v value`` line per reached vertex, ascending by vertex."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path

from tradeoff_sssp.files.graph_file import InputError


@dataclass(frozen=True)
class DistanceDiff:
    """Outcome of comparing two distances files."""

    code: int
    message: str


def format_distances(values: Mapping[int, str]) -> str:
    return "".join(f"{v} {values[v]}\n" for v in sorted(values))


def write_distances(path: Path, values: Mapping[int, str]) -> None:
    path.write_text(format_distances(values))


def parse_distances(text: str) -> dict[int, str]:
    values: dict[int, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        vertex, _, value = line.partition(" ")
        try:
            v = int(vertex)
        except ValueError as exc:
            raise InputError(f"Line {number}: expected a vertex id, got {vertex!r}") from exc
        if not value.strip():
            raise InputError(f"Line {number}: vertex {v} has no value")
        if v in values:
            raise InputError(f"Line {number}: vertex {v} listed twice")
        values[v] = " ".join(value.split())
    return values


def read_distances(path: Path) -> dict[int, str]:
    try:
        return parse_distances(path.read_text())
    except OSError as exc:
        raise InputError(f"Cannot read distances file {path}: {exc}") from exc


def compare_distances(first: Mapping[int, str], second: Mapping[int, str]) -> DistanceDiff:
    """0 when identical, 2 when the vertex counts differ, 1 at the first differing vertex."""
    if len(first) != len(second):
        return DistanceDiff(2, f"Vertex counts differ: {len(first)} vs {len(second)}")
    for v in sorted(set(first) | set(second)):
        if first.get(v) != second.get(v):
            return DistanceDiff(1, f"Mismatch at v={v}: {first.get(v, '-')} vs {second.get(v, '-')}")
    return DistanceDiff(0, f"Identical ({len(first)} vertices)")
