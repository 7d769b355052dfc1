"""Plain-text graph files.

Header ``n m s``, then one edge per line: ``tail head num den`` for real
weights or ``tail head atom`` for lex labels and binary exponents. Blank lines
and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path
from typing import Any

from tradeoff_sssp.core.generators import KINDS, GraphInstance


class InputError(ValueError):
    """Raised when an input file does not match the expected format."""


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _integers(fields: list[str], number: int) -> list[int]:
    try:
        return [int(field) for field in fields]
    except ValueError as exc:
        raise InputError(f"Line {number}: expected integers, got {' '.join(fields)!r}") from exc


def format_graph(instance: GraphInstance) -> str:
    lines = [f"{instance.n} {instance.m} {instance.source}"]
    for tail, head, atom in instance.edges:
        if instance.kind == "real":
            weight = Fraction(atom)
            lines.append(f"{tail} {head} {weight.numerator} {weight.denominator}")
        else:
            lines.append(f"{tail} {head} {atom}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str, kind: str = "real") -> GraphInstance:
    if kind not in KINDS:
        raise InputError(f"Unknown weight kind {kind!r}; expected one of {', '.join(KINDS)}")
    rows = _content_lines(text)
    try:
        number, header = next(rows)
    except StopIteration as exc:
        raise InputError("Graph file is empty") from exc
    if len(header) != 3:
        raise InputError(f"Line {number}: header must be 'n m s', got {' '.join(header)!r}")
    n, m, source = _integers(header, number)
    if n < 1 or not 0 <= source < n:
        raise InputError(f"Line {number}: source {source} is not a vertex of a graph with n={n}")

    width = 4 if kind == "real" else 3
    edges: list[tuple[int, int, Any]] = []
    for number, fields in rows:
        if len(fields) != width:
            raise InputError(f"Line {number}: a {kind} edge has {width} fields, got {len(fields)}")
        values = _integers(fields, number)
        tail, head = values[0], values[1]
        if not (0 <= tail < n and 0 <= head < n):
            raise InputError(f"Line {number}: edge {tail}->{head} outside 0..{n - 1}")
        if kind == "real":
            if values[3] <= 0 or values[2] < 0:
                raise InputError(f"Line {number}: weight {values[2]}/{values[3]} must be a non-negative fraction")
            edges.append((tail, head, Fraction(values[2], values[3])))
        else:
            if values[2] < 0:
                raise InputError(f"Line {number}: atom {values[2]} must be non-negative")
            edges.append((tail, head, values[2]))
    if len(edges) != m:
        raise InputError(f"Header announces {m} edges, found {len(edges)}")
    return GraphInstance(n=n, source=source, kind=kind, edges=tuple(edges))


def write_graph(path: Path, instance: GraphInstance) -> None:
    path.write_text(format_graph(instance))


def read_graph(path: Path, kind: str = "real") -> GraphInstance:
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"Cannot read graph file {path}: {exc}") from exc
    return parse_graph(text, kind)
