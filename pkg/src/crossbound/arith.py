"""Exact comparisons involving sqrt(k) for integer k.

All bounds of the form ``a + b*sqrt(k) <= c`` are decided on integers only,
so no floating point tolerance ever enters a theorem check.
"""

from __future__ import annotations

import math


def sign_lin_sqrt(x: int, k: int, y: int) -> int:
    """Return the sign of ``x*sqrt(k) + y``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if x == 0 or k == 0:
        return (y > 0) - (y < 0)
    sx = 1 if x > 0 else -1
    sy = (y > 0) - (y < 0)
    if sy == 0 or sy == sx:
        return sx
    # opposite signs: compare magnitudes squared
    lhs, rhs = x * x * k, y * y
    if lhs == rhs:
        return 0
    return sx if lhs > rhs else sy


def leq_with_sqrt(a: int, b: int, k: int) -> bool:
    """Decide ``a <= b*sqrt(k)``."""
    return sign_lin_sqrt(b, k, -a) >= 0


def compare_weighted(k: int, first: tuple[int, int], second: tuple[int, int]) -> int:
    """Compare ``f(t, t') = sqrt(k)*t + t'`` at two points; returns -1, 0 or 1."""
    (t1, s1), (t2, s2) = first, second
    return sign_lin_sqrt(t1 - t2, k, s1 - s2)


def weighted_value(k: int, t: int, t_indep: int) -> float:
    """Float value of ``sqrt(k)*t + t'``, for display only."""
    return math.sqrt(k) * t + t_indep


def main_bound(k: int) -> float:
    """Float value of ``2k + 6 sqrt(k) + 47``, for display only."""
    return 2 * k + 6 * math.sqrt(k) + 47


def within_main_bound(crossings: int, k: int) -> bool:
    """Decide ``crossings <= 2k + 6 sqrt(k) + 47`` exactly."""
    return leq_with_sqrt(crossings - 2 * k - 47, 6, k)
