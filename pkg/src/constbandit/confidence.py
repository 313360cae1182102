"""Hoeffding confidence radii and per-round pull budgets."""

from __future__ import annotations

import math


def hoeffding_radius(n: int, delta: float) -> float:
    """Half-width sqrt(ln(1/delta) / (2n)) around a mean of n samples in [0,1].

    Strictly decreasing in ``n`` and decreasing in ``delta``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 < delta <= 1.0:
        raise ValueError("delta must lie in (0, 1]")
    return math.sqrt(math.log(1.0 / delta) / (2.0 * n))


def round_budget(g: float, delta: float) -> int:
    """Pull count ceil(2 ln(1/delta) / g^2) guaranteeing a radius of at most g/2."""
    if not 0.0 < g <= 1.0:
        raise ValueError("precision must lie in (0, 1]")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    g_sq = g * g
    if g_sq == 0.0:
        raise OverflowError("pull budget overflows")
    raw = 2.0 * math.log(1.0 / delta) / g_sq
    if math.isinf(raw):
        raise OverflowError("pull budget overflows")
    return math.ceil(raw)
