"""Shared grid-scan and bracketed-refinement machinery on the g axis.

One home for the numerical conventions every momentum-space search uses:
the [0, G_MAX] analysis window, the composite linear+log coarse grid,
cached f^2 evaluations per medium, golden-section refinement, and
bisection to full double precision.  Everything here is deterministic and
free of shared mutable state (lru_cache is thread-safe), so callers may
run concurrently.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .dispersion import MediumParams, f_squared

#: Upper end of the dimensionless momentum window.  Beyond it the g^2/4
#: term dominates (the dipolar term is bounded by 3R/sqrt(2*pi) * ... <= 3/2
#: for all admissible R), so f(G_MAX) > 1 always; asserted where relied on.
G_MAX = 10.0

#: Coarse-grid size used by the minimization searches.
MIN_SCAN_POINTS = 4096

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@lru_cache(maxsize=32)
def hybrid_grid(n_points: int, g_max: float = G_MAX) -> np.ndarray:
    """Sorted union of a linear and a log-spaced grid on [0, g_max].

    The linear half resolves O(1) structure (roton dip, support windows at
    moderate g); the log half, reaching down to 1e-12*g_max, resolves
    features tied to small scales such as deexcitation windows near
    g ~ |omega_tilde|.
    """
    n_lin = n_points // 2
    n_log = n_points - n_lin
    lin = np.linspace(0.0, g_max, n_lin)
    log = np.geomspace(1e-12 * g_max, g_max, n_log)
    grid = np.unique(np.concatenate([lin, log]))
    grid.setflags(write=False)
    return grid


@lru_cache(maxsize=256)
def f2_on_grid(A: float, R: float, n_points: int, g_max: float = G_MAX):
    """(grid, f^2 values) for a medium, cached per (A, R, grid shape)."""
    grid = hybrid_grid(n_points, g_max)
    vals = np.asarray(f_squared(grid, MediumParams(A=A, R=R)), dtype=float)
    vals.setflags(write=False)
    return grid, vals


def golden_min(fn, a: float, b: float, xtol: float = 1e-10):
    """Golden-section minimum of ``fn`` on [a, b] to a bracket of ``xtol``.

    Assumes ``fn`` is unimodal on the bracket (true for the narrow brackets
    handed over by the coarse scans).  Returns (x, fn(x)).
    """
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1, f2 = fn(x1), fn(x2)
    while b - a > xtol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = fn(x2)
    x = 0.5 * (a + b)
    return x, fn(x)


def bisect_root(fn, a: float, b: float, fa: float | None = None) -> float:
    """Bisection root of ``fn`` on a sign-change bracket, refined until the
    midpoint is no longer representable between the bracket ends (i.e. to
    full double precision).  Deterministic; at most ~60 iterations."""
    if fa is None:
        fa = fn(a)
    if fa == 0.0:
        return a
    neg_a = fa < 0.0
    for _ in range(200):
        m = 0.5 * (a + b)
        if m == a or m == b:
            break
        fm = fn(m)
        if fm == 0.0:
            return m
        if (fm < 0.0) == neg_a:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def refine_grid_min(grid: np.ndarray, values: np.ndarray, fn, xtol: float = 1e-10):
    """Refine the coarse-grid argmin of ``values`` with golden section.

    ``fn`` is the scalar counterpart of ``values``.  np.argmin takes the
    first occurrence, so exact plateaus resolve to the smallest g.
    Returns (g_min, value_min) with value_min <= min(values) + rounding.
    """
    i = int(np.argmin(values))
    lo = grid[i - 1] if i > 0 else grid[i]
    hi = grid[i + 1] if i < len(grid) - 1 else grid[i]
    if lo == hi:
        return float(grid[i]), float(values[i])
    x, v = golden_min(fn, float(lo), float(hi), xtol)
    if values[i] < v:  # guard against any non-unimodality in the bracket
        return float(grid[i]), float(values[i])
    return x, v
