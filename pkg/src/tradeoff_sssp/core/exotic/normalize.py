from __future__ import annotations

from collections.abc import Sequence

from tradeoff_sssp.core.exotic.weight import InvalidAtom


def normalize_exponents(exponents: Sequence[int], m: int | None = None) -> list[int]:
    """Shrink gaps between exponents of ``2^w`` weights without changing any comparison.

    With ``m`` edges, fewer than ``m`` weights lie below any gap, so their sum
    stays under ``2^(L + m - 1)`` for the exponent ``L`` right before the gap.
    Every gap of at least ``m`` is collapsed to ``m - 1`` and the smallest
    exponent is shifted below ``m``; the result is below ``m^2``.
    """
    if any(e < 0 for e in exponents):
        raise InvalidAtom(f"Exponents must be non-negative, got {min(exponents)}")
    edges = max(1, len(exponents), m or 0)
    distinct = sorted(set(exponents))
    if not distinct:
        return []
    mapped: dict[int, int] = {}
    previous_old = distinct[0]
    previous_new = distinct[0] if distinct[0] < edges else edges - 1
    mapped[previous_old] = previous_new
    for value in distinct[1:]:
        previous_new += min(value - previous_old, edges - 1)
        previous_old = value
        mapped[value] = previous_new
    return [mapped[e] for e in exponents]
