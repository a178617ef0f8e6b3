"""Adaptive Simpson quadrature."""

from __future__ import annotations

import math
from typing import Callable

from .errors import QuadratureNonconvergence


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 48,
    max_intervals: int = 200_000,
) -> float:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Each panel is split until ``|S_left + S_right - S_whole| <= 15 * tol_panel``
    and then Richardson-corrected.  The panel tolerance halves with every
    split so the accepted panels sum to at most ``tol``.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise QuadratureNonconvergence("integration limits must be finite")
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    total = 0.0
    visited = 0
    while stack:
        lo, hi, flo, fmid, fhi, s, eps, depth = stack.pop()
        visited += 1
        if visited > max_intervals:
            raise QuadratureNonconvergence(f"more than {max_intervals} panels visited")
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - s
        if not math.isfinite(delta):
            raise QuadratureNonconvergence(f"non-finite integrand near [{lo}, {hi}]")
        if abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
            continue
        if depth >= max_depth:
            raise QuadratureNonconvergence(
                f"panel [{lo:.6g}, {hi:.6g}] still above tolerance at depth {depth}"
            )
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
    return total
