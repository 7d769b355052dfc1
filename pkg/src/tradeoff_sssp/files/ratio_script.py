from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from tradeoff_sssp.files.graph_file import InputError


@dataclass(frozen=True)
class Insertion:
    tail: int
    head: int
    cost: Fraction
    time: Fraction


def parse_ratio_script(text: str) -> list[Insertion]:
    """Lines ``p q c_num c_den t_num t_den``; ``#`` comments and blank lines are skipped."""
    insertions: list[Insertion] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 6:
            raise InputError(f"Line {number}: expected 'p q c_num c_den t_num t_den', got {line!r}")
        try:
            p, q, c_num, c_den, t_num, t_den = (int(field) for field in fields)
        except ValueError as exc:
            raise InputError(f"Line {number}: expected integers, got {line!r}") from exc
        if p < 0 or q < 0:
            raise InputError(f"Line {number}: vertex ids must be non-negative")
        if c_den == 0 or t_den == 0:
            raise InputError(f"Line {number}: zero denominator")
        time = Fraction(t_num, t_den)
        if time <= 0:
            raise InputError(f"Line {number}: time {time} must be positive")
        insertions.append(Insertion(p, q, Fraction(c_num, c_den), time))
    return insertions


def read_ratio_script(path: Path) -> list[Insertion]:
    try:
        return parse_ratio_script(path.read_text())
    except OSError as exc:
        raise InputError(f"Cannot read ratio script {path}: {exc}") from exc
