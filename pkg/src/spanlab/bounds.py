"""Closed-form counting bounds for hypersurfaces through curves.

All formulas are exact integer arithmetic; Python integers never overflow.
The companion rank computations live in ``jets``; nothing here claims any
geometric classification on its own.
"""

from __future__ import annotations

from math import comb
from typing import Sequence


def max_hypersurfaces(n: int, m: int) -> int:
    """Largest possible number of independent degree-m hypersurfaces through a
    non-degenerate curve in projective n-space: C(m+n, n) - m*n - 1."""
    if n < 1 or m < 2:
        raise ValueError(f"need n >= 1 and m >= 2, got n={n}, m={m}")
    return comb(m + n, n) - m * n - 1


def next_hypersurface_bound(n: int, m: int) -> int:
    """Second-largest admissible count: C(m+n, n) - m*(n+1).

    Any curve not attaining ``max_hypersurfaces`` lies on at most this many
    independent degree-m hypersurfaces.
    """
    if n < 2 or m < 2:
        raise ValueError(f"need n >= 2 and m >= 2, got n={n}, m={m}")
    return comb(m + n, n) - m * (n + 1)


def quadric_bound(c: int) -> int:
    """Maximal number of independent quadrics through a variety of codimension c."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    return c * (c + 1) // 2


def pluecker_budget(n: int, d: int, g: int) -> int:
    """Total inflection weight of a degree-d genus-g linear system of rank n:
    (n+1)*d + n*(n+1)*(g-1)."""
    if n < 1 or d < 1 or g < 0:
        raise ValueError(f"need n >= 1, d >= 1, g >= 0, got n={n}, d={d}, g={g}")
    return (n + 1) * d + n * (n + 1) * (g - 1)


def check_weight_budget(n: int, d: int, g: int, weights: Sequence[int]) -> bool:
    """Whether the given point weights exhaust the total inflection budget."""
    if any(w < 1 for w in weights):
        raise ValueError("point weights must be >= 1")
    return sum(weights) == pluecker_budget(n, d, g)
