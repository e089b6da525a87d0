"""Spectral criticalities: dispersion infimum, critical rapidity, and the
stability boundary in A.

The central quantity is f_c = inf_g f(g).  A detector dragged through the
condensate at rapidity beta (velocity c0*tanh(beta)) changes behavior at
the critical rapidity beta_c = arctanh(f_c): below it, excitation is
kinematically forbidden; above it, spontaneous excitation turns on.  f_c
exists in (0, 1) whenever R > 0, reaches 0 at the stability boundary
A = A_c(R), and equals 1 in the contact limit R = 0 where f >= 1
everywhere (beta_c unbounded, returned as math.inf).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._scan import G_MAX, MIN_SCAN_POINTS, f2_on_grid, refine_grid_min
from .dispersion import MediumParams, R_DDI, f_squared
from .errors import DomainError, NoInstabilityError, UnstableSpectrumError

__all__ = [
    "CLASS_MONOTONE",
    "CLASS_DIP",
    "CLASS_ROTONIZED",
    "CLASS_UNSTABLE",
    "SpectrumFeatures",
    "min_f",
    "critical_rapidity",
    "critical_A",
    "classify",
]

CLASS_MONOTONE = "monotone-superluminal"
CLASS_DIP = "subluminal-dip"
CLASS_ROTONIZED = "rotonized"
CLASS_UNSTABLE = "unstable"

#: R below which no instability exists at any A: the dipolar term is
#: bounded by (3/2)*sqrt(2/pi)*R * (saturating factor < 1), so min_g f^2
#: stays positive whenever (3/2)*sqrt(2/pi)*R <= 1.
R_INSTABILITY_THRESHOLD = math.sqrt(2.0 * math.pi) / 3.0


@dataclass(frozen=True)
class SpectrumFeatures:
    """Summary of one medium's dispersion.

    f_c: infimum of f over g >= 0 (nan when unstable)
    g_at_min: location of the infimum (0.0 when f >= 1 everywhere)
    beta_c: arctanh(f_c); math.inf when f_c >= 1, nan when unstable
    classification: one of the CLASS_* strings
    """

    f_c: float
    g_at_min: float
    beta_c: float
    classification: str


def _f2_scalar(medium: MediumParams):
    def fn(g: float) -> float:
        return float(f_squared(g, medium))

    return fn


@lru_cache(maxsize=512)
def _refined_min_f2(A: float, R: float, scan_points: int, g_max: float):
    grid, vals = f2_on_grid(A, R, scan_points, g_max)
    g_min, v_min = refine_grid_min(grid, vals, _f2_scalar(MediumParams(A=A, R=R)))
    return g_min, v_min, float(vals[-1])


def min_f(medium: MediumParams, scan_points: int = MIN_SCAN_POINTS,
          g_max: float = G_MAX) -> tuple[float, float]:
    """Global minimum of f on [0, g_max]: returns (g_at_min, f_c).

    Coarse scan on the hybrid grid, then golden-section refinement of the
    best bracket to |dg| <= 1e-10.  When f >= 1 everywhere (R = 0, where
    f = sqrt(1 + g^2/4) is increasing) the infimum sits at g -> 0 and
    (0.0, 1.0) is reported.  Raises UnstableSpectrumError when the refined
    minimum of f^2 is negative.
    """
    g_min, v_min, v_end = _refined_min_f2(medium.A, medium.R, scan_points, g_max)
    assert v_end > 1.0, "f(g_max) <= 1: cutoff g_max too small for this medium"
    if v_min < 0.0:
        raise UnstableSpectrumError(g=g_min, f_squared=v_min)
    if v_min >= 1.0:
        return 0.0, 1.0
    return g_min, math.sqrt(v_min)


def critical_rapidity(medium: MediumParams) -> float:
    """Critical rapidity beta_c = arctanh(f_c).

    Returns math.inf when f_c >= 1 (within 1e-12), meaning the detector
    stays unexcited at every subsonic rapidity.  Propagates
    UnstableSpectrumError from the minimization.
    """
    _, f_c = min_f(medium)
    if f_c >= 1.0 - 1e-12:
        return math.inf
    return math.atanh(f_c)


def _min_f2_of_A(A: float, R: float) -> float:
    return _refined_min_f2(A, R, MIN_SCAN_POINTS, G_MAX)[1]


def critical_A(R: float, tol: float = 1e-4) -> float:
    """Smallest A at which min_g f^2(g; A, R) reaches zero, to within tol.

    Bisection on A over [1e-3, 64], relying on min_g f^2 decreasing in A.
    That monotonicity is checked on a sample of the bracket at run time;
    if it ever failed, a dense scan of A locates the first sign change
    and bisection proceeds inside that sub-bracket.

    Raises NoInstabilityError for R = 0 and for any R whose spectrum stays
    stable throughout the bracket (true for all R <= sqrt(2*pi)/3, where
    the dipolar attraction can never overcome 1 + g^2/4).
    """
    if not (math.isfinite(R) and 0.0 <= R <= R_DDI * (1 + 1e-12)):
        raise DomainError(f"R must lie in [0, sqrt(pi/2)], got {R}")
    if not (math.isfinite(tol) and tol > 0):
        raise DomainError(f"tol must be positive, got {tol}")
    if R == 0.0:
        raise NoInstabilityError("R = 0: f^2 = 1 + g^2/4 >= 1 for every A")

    lo, hi = 1e-3, 64.0
    m_lo = _min_f2_of_A(lo, R)
    m_hi = _min_f2_of_A(hi, R)
    if m_hi > 0.0:
        raise NoInstabilityError(
            f"spectrum remains stable up to A = {hi:g} at R = {R:.6g} "
            f"(min f^2 = {m_hi:.3g}); no instability below R = "
            f"{R_INSTABILITY_THRESHOLD:.6f} at any A"
        )
    if m_lo <= 0.0:
        raise DomainError(f"bracket lower end A = {lo:g} already unstable at R = {R:.6g}")

    samples = np.geomspace(lo, hi, 9)
    sample_vals = [_min_f2_of_A(float(a), R) for a in samples]
    monotone = all(b <= a + 1e-9 for a, b in zip(sample_vals, sample_vals[1:]))
    if not monotone:
        # fall back to scanning A for the first sign change
        a_grid = np.geomspace(lo, hi, 2049)
        vals = [_min_f2_of_A(float(a), R) for a in a_grid]
        first = next(i for i, v in enumerate(vals) if v <= 0.0)
        lo, hi = float(a_grid[first - 1]), float(a_grid[first])

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _min_f2_of_A(mid, R) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _dispersion_extrema(grid: np.ndarray, f2: np.ndarray):
    """Interior local maxima/minima of the quasiparticle energy g*f(g)."""
    gf = grid * np.sqrt(np.maximum(f2, 0.0))
    d = np.diff(gf)
    s = np.sign(d)
    s[s == 0] = 1.0
    turn = np.flatnonzero(s[:-1] != s[1:]) + 1
    maxima = [i for i in turn if s[i - 1] > 0]
    minima = [i for i in turn if s[i - 1] < 0]
    return gf, maxima, minima


def classify(medium: MediumParams) -> SpectrumFeatures:
    """Populate SpectrumFeatures, mapping instability to a classification
    rather than an error.

    rotonized: the quasiparticle energy g*f(g) is non-monotone, i.e. it has
    an interior local maximum followed by a lower local minimum (the
    maxon/roton structure of the dispersion).  Detected on the coarse grid;
    the extrema are O(1) wide so grid resolution is ample.
    subluminal-dip: f dips below 1 somewhere but the dispersion itself
    stays monotone.  monotone-superluminal: f >= 1 everywhere (R = 0).
    """
    grid, f2 = f2_on_grid(medium.A, medium.R, MIN_SCAN_POINTS, G_MAX)
    g_min, v_min = refine_grid_min(grid, f2, _f2_scalar(medium))
    if v_min < 0.0:
        return SpectrumFeatures(
            f_c=math.nan, g_at_min=g_min, beta_c=math.nan,
            classification=CLASS_UNSTABLE,
        )
    if v_min >= 1.0:
        return SpectrumFeatures(
            f_c=1.0, g_at_min=0.0, beta_c=math.inf,
            classification=CLASS_MONOTONE,
        )
    f_c = math.sqrt(v_min)
    beta_c = math.atanh(f_c) if f_c < 1.0 - 1e-12 else math.inf

    gf, maxima, minima = _dispersion_extrema(grid, f2)
    scale = max(1.0, float(gf.max()))
    rotonized = any(
        j < k and gf[j] > gf[k] + 1e-9 * scale
        for j in maxima
        for k in minima
    )
    return SpectrumFeatures(
        f_c=f_c,
        g_at_min=g_min,
        beta_c=beta_c,
        classification=CLASS_ROTONIZED if rotonized else CLASS_DIP,
    )
