"""Transition rate of a uniformly moving impurity detector.

The detector, a two-level impurity with gap Omega dipole-coupled to the
condensate's density fluctuations, moves at velocity c0*tanh(beta).  Its
transition rate reduces to a one-dimensional momentum integral

    rate = int_0^inf dg  g^2 / f(g) *
           Theta(g*t - |Om + g*f(g)|) / sqrt(g^2 t^2 - (Om + g*f(g))^2),

with t = tanh(beta) and Om = Omega/M_star signed (positive: excitation,
negative: deexcitation).  The reported ``value`` is this dimensionless
integral; multiplying by rho0*M_star*g_minus^2*c0^2/(2*pi)^3 gives the
dimensional rate (see RateResult.dimensional_value).

Numerically there are two tasks.  First resolve the Heaviside support:
writing Phi(g) = (g*t)^2 - (Om + g*f)^2 = -(N*P) with

    N(g) = Om + g*(f(g) - t),      P(g) = Om + g*(f(g) + t),

the support is {N < 0} intersect {P > 0}, so its endpoints are roots of N
or P.  Roots are bracketed by a sign scan over the hybrid grid plus a
golden-section rescue around near-tangent local extrema (windows narrower
than the grid), then bisected to full double precision.  Second, integrate
g^2/(f*sqrt(Phi)) over each interval: the integrand diverges like
Phi^(-1/2) at both endpoints, which the arcsine substitution
g = m0 + h*sin(u) absorbs into a bounded integrand on [-pi/2, pi/2],
handed to adaptive Gauss-Kronrod quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import erfcx

from ._scan import G_MAX, bisect_root, f2_on_grid, golden_min
from .dispersion import MediumParams
from .errors import DomainError
from .spectrum import min_f
from .tables import CurveTable

__all__ = [
    "QuadratureSettings",
    "DetectorConfig",
    "SupportInterval",
    "SupportSet",
    "RateResult",
    "support_set",
    "excitation_window",
    "transition_rate",
    "transition_rate_low_speed",
    "rate_curve",
]

#: Support intervals narrower than this are treated as grazing tangencies
#: (Phi touching zero at the critical rapidity) and discarded; the rate is
#: then 0 with the ``grazing`` flag set, since the integral over a vanishing
#: window is finite but numerically ill-conditioned and the behavior exactly
#: at criticality is not defined.
GRAZING_WIDTH = 1e-10

ENDPOINT_THETA_ROOT = "theta-root"
ENDPOINT_ORIGIN = "origin"

# fraction of the local scale below which a positive local minimum of N
# (or negative local maximum of P) triggers a tangency rescue
_TANGENCY_BAND = 0.1


@dataclass(frozen=True)
class QuadratureSettings:
    """Controls for support scanning and the singular quadrature.

    rel_tol / abs_tol: targets for each interval's adaptive integral
    max_refinements: subdivision budget of the adaptive scheme
    scan_points: size of the sign-change scan grid on [0, G_MAX]
    """

    rel_tol: float = 1e-8
    abs_tol: float = 1e-14
    max_refinements: int = 30
    scan_points: int = 8192

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1.0):
            raise DomainError(f"rel_tol must be in (0, 1), got {self.rel_tol}")
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if not self.max_refinements >= 1:
            raise DomainError(f"max_refinements must be >= 1, got {self.max_refinements}")
        if not self.scan_points >= 16:
            raise DomainError(f"scan_points must be >= 16, got {self.scan_points}")


DEFAULT_QUADRATURE = QuadratureSettings()


@dataclass(frozen=True)
class DetectorConfig:
    """Detector gap and trajectory, plus optional scales for dimensional
    output.

    omega_tilde: signed dimensionless gap Omega/M_star
    beta: rapidity >= 0; the velocity c0*tanh(beta) stays subsonic
    coupling_g_minus, rho0, M_star, c0: when all are given, RateResult
        also carries the dimensional rate.
    """

    omega_tilde: float
    beta: float
    coupling_g_minus: float | None = None
    rho0: float | None = None
    M_star: float | None = None
    c0: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.omega_tilde):
            raise DomainError(f"omega_tilde must be finite, got {self.omega_tilde}")
        if not (math.isfinite(self.beta) and self.beta >= 0):
            raise DomainError(f"beta must be >= 0 and finite, got {self.beta}")

    @classmethod
    def from_velocity(cls, omega_tilde: float, velocity_fraction: float, **kwargs):
        """Build from v/c0 in [0, 1) instead of the rapidity."""
        if not (0.0 <= velocity_fraction < 1.0):
            raise DomainError(
                f"velocity fraction must be in [0, 1), got {velocity_fraction}"
            )
        return cls(omega_tilde=omega_tilde, beta=math.atanh(velocity_fraction), **kwargs)

    def dimensional_prefactor(self) -> float | None:
        """rho0*M_star*g_minus^2*c0^2/(2*pi)^3, or None if scales missing."""
        vals = (self.rho0, self.M_star, self.coupling_g_minus, self.c0)
        if any(v is None for v in vals):
            return None
        return (
            self.rho0 * self.M_star * self.coupling_g_minus**2 * self.c0**2
            / (2.0 * math.pi) ** 3
        )


@dataclass(frozen=True)
class SupportInterval:
    """One maximal interval where the Heaviside constraint holds."""

    g_lo: float
    g_hi: float
    lo_kind: str = ENDPOINT_THETA_ROOT
    hi_kind: str = ENDPOINT_THETA_ROOT

    @property
    def width(self) -> float:
        return self.g_hi - self.g_lo


@dataclass(frozen=True)
class SupportSet:
    """Disjoint, sorted union of support intervals."""

    intervals: tuple[SupportInterval, ...]
    total_measure: float

    @property
    def empty(self) -> bool:
        return not self.intervals


@dataclass(frozen=True)
class RateResult:
    """Rate integral outcome.

    value: dimensionless rate (units rho0*M_star*g_minus^2*c0^2/(2*pi)^3);
        0 exactly when the support is empty
    abs_error_estimate: summed error estimate of the adaptive quadrature
    support: the resolved SupportSet
    dimensional_value: value * prefactor when the detector carried scales
    converged: False when some interval exhausted its refinement budget
        (value is then best-effort)
    grazing: True when a sub-GRAZING_WIDTH tangency window was discarded
    """

    value: float
    abs_error_estimate: float
    support: SupportSet
    dimensional_value: float | None = None
    converged: bool = True
    grazing: bool = False


def _f_scalar(A: float, R: float):
    c1 = 1.5 * R * math.sqrt(A)
    c2 = math.sqrt(A / 2.0)

    def f(g: float) -> float:
        return math.sqrt(1.0 - c1 * g * float(erfcx(c2 * g)) + 0.25 * g * g)

    return f


def _sign_change_roots(grid, vals, fn, roots):
    s = np.sign(vals)
    s[s == 0] = 1.0  # an exact grid zero counts with its right neighborhood
    idx = np.flatnonzero(s[:-1] != s[1:])
    for i in idx:
        roots.append(bisect_root(fn, float(grid[i]), float(grid[i + 1]), float(vals[i])))


def _tangency_roots(grid, vals, fn, roots, scale, find_min):
    """Rescue windows narrower than the grid spacing.

    A support window that fits between two grid points shows up as a local
    extremum of N (minimum) or P (maximum) that approaches zero without a
    sign change on the grid.  Golden-section refinement of each candidate
    bracket either certifies no crossing or produces the two roots.
    """
    v = vals if find_min else -vals
    interior = (
        (v[1:-1] < v[:-2]) & (v[1:-1] <= v[2:])
        & (v[1:-1] > 0.0) & (v[1:-1] < _TANGENCY_BAND * scale)
    )
    for i in np.flatnonzero(interior) + 1:
        a, b = float(grid[i - 1]), float(grid[i + 1])
        obj = fn if find_min else (lambda g: -fn(g))
        x, vx = golden_min(obj, a, b, xtol=1e-12)
        if vx < 0.0:
            roots.append(bisect_root(fn, a, x))
            roots.append(bisect_root(fn, x, b))


def _theta_support(omega_tilde: float, t: float, medium: MediumParams,
                   settings: QuadratureSettings) -> tuple[SupportSet, bool]:
    """Resolve {g in (0, G_MAX]: g*t > |omega_tilde + g*f(g)|}.

    Returns (support, grazing_flag).  Raises UnstableSpectrumError (via
    min_f) for unstable media and DomainError if the support would touch
    the cutoff, which cannot happen for |omega_tilde| <= 1, beta <= 5.
    """
    min_f(medium)  # stability gate
    grid, f2 = f2_on_grid(medium.A, medium.R, settings.scan_points, G_MAX)
    f_vals = np.sqrt(f2)
    gf = grid * f_vals
    f = _f_scalar(medium.A, medium.R)

    if t == 0.0:
        # g*t = 0 can never exceed |omega_tilde + g*f| on an interval
        return SupportSet(intervals=(), total_measure=0.0), False

    def n_fn(g: float) -> float:
        return omega_tilde + g * (f(g) - t)

    def p_fn(g: float) -> float:
        return omega_tilde + g * (f(g) + t)

    n_vals = omega_tilde + gf - t * grid
    p_vals = omega_tilde + gf + t * grid

    def phi(g: float) -> float:
        return -n_fn(g) * p_fn(g)

    if not phi(G_MAX) < 0.0:
        raise DomainError(
            f"Heaviside support reaches the cutoff g = {G_MAX:g}; parameters "
            f"(omega_tilde={omega_tilde:g}, speed={t:g}) are outside the "
            "supported analysis window"
        )

    scale = 1.0 + abs(omega_tilde)
    roots: list[float] = []
    _sign_change_roots(grid, n_vals, n_fn, roots)
    _sign_change_roots(grid, p_vals, p_fn, roots)
    _tangency_roots(grid, n_vals, n_fn, roots, scale, find_min=True)
    _tangency_roots(grid, p_vals, p_fn, roots, scale, find_min=False)

    edges = [0.0] + sorted(set(roots)) + [G_MAX]
    intervals: list[SupportInterval] = []
    grazing = False
    for a, b in zip(edges[:-1], edges[1:]):
        if not phi(0.5 * (a + b)) > 0.0:
            continue
        if b - a < GRAZING_WIDTH:
            grazing = True
            continue
        intervals.append(SupportInterval(
            g_lo=a, g_hi=b,
            lo_kind=ENDPOINT_ORIGIN if a == 0.0 else ENDPOINT_THETA_ROOT,
            hi_kind=ENDPOINT_THETA_ROOT,
        ))
    total = sum(iv.width for iv in intervals)
    return SupportSet(intervals=tuple(intervals), total_measure=total), grazing


def support_set(det: DetectorConfig, medium: MediumParams,
                settings: QuadratureSettings = DEFAULT_QUADRATURE) -> SupportSet:
    """All maximal intervals of {g > 0: g*tanh(beta) > |Om + g*f(g)|}
    within [0, G_MAX], endpoints bisected to full double precision."""
    support, _ = _theta_support(det.omega_tilde, math.tanh(det.beta), medium, settings)
    return support


def excitation_window(beta: float, medium: MediumParams,
                      scan_points: int = 8192) -> float:
    """sup over g in [0, G_MAX] of g*(tanh(beta) - f(g)), clamped at 0.

    Positive gaps below this value have nonzero excitation rate; the
    window is 0 for beta <= beta_c (tanh(beta) <= f_c <= f everywhere).
    """
    if not (math.isfinite(beta) and beta >= 0):
        raise DomainError(f"beta must be >= 0 and finite, got {beta}")
    min_f(medium)  # stability gate
    t = math.tanh(beta)
    grid, f2 = f2_on_grid(medium.A, medium.R, scan_points, G_MAX)
    vals = grid * (np.sqrt(f2) - t)  # minimize -g*(t - f)
    f = _f_scalar(medium.A, medium.R)

    def obj(g: float) -> float:
        return g * (f(g) - t)

    i = int(np.argmin(vals))
    lo = grid[i - 1] if i > 0 else grid[i]
    hi = grid[i + 1] if i < len(grid) - 1 else grid[i]
    _, v = golden_min(obj, float(lo), float(hi), xtol=1e-12)
    return max(0.0, -min(float(vals[i]), v))


def _integrate_interval(iv: SupportInterval, omega_tilde: float, t: float,
                        A: float, R: float, settings: QuadratureSettings):
    """Integral of g^2/(f*sqrt(Phi)) over one interval via g = m0 + h*sin(u)."""
    m0 = 0.5 * (iv.g_lo + iv.g_hi)
    h = 0.5 * (iv.g_hi - iv.g_lo)
    c1 = 1.5 * R * math.sqrt(A)
    c2 = math.sqrt(A / 2.0)

    def integrand(u: float) -> float:
        g = m0 + h * math.sin(u)
        fg = math.sqrt(1.0 - c1 * g * float(erfcx(c2 * g)) + 0.25 * g * g)
        m = omega_tilde + g * fg
        phi_val = (t * g - m) * (t * g + m)
        if phi_val <= 0.0:  # only reachable within rounding of the endpoints
            return 0.0
        return g * g / (fg * math.sqrt(phi_val)) * h * math.cos(u)

    out = quad(
        integrand, -0.5 * math.pi, 0.5 * math.pi,
        epsabs=settings.abs_tol, epsrel=settings.rel_tol,
        limit=settings.max_refinements, full_output=1,
    )
    value, abserr = out[0], out[1]
    converged = len(out) == 3  # QUADPACK appends a message when unhappy
    return value, abserr, converged


def _rate(omega_tilde: float, t: float, medium: MediumParams,
          settings: QuadratureSettings, prefactor: float | None) -> RateResult:
    support, grazing = _theta_support(omega_tilde, t, medium, settings)
    total = 0.0
    err = 0.0
    converged = True
    for iv in support.intervals:
        v, e, ok = _integrate_interval(iv, omega_tilde, t, medium.A, medium.R, settings)
        total += v
        err += e
        converged = converged and ok
    return RateResult(
        value=total,
        abs_error_estimate=err,
        support=support,
        dimensional_value=None if prefactor is None else prefactor * total,
        converged=converged,
        grazing=grazing,
    )


def transition_rate(det: DetectorConfig, medium: MediumParams,
                    settings: QuadratureSettings = DEFAULT_QUADRATURE) -> RateResult:
    """Detector transition rate at rapidity beta (speed tanh(beta))."""
    return _rate(det.omega_tilde, math.tanh(det.beta), medium, settings,
                 det.dimensional_prefactor())


def transition_rate_low_speed(det: DetectorConfig, medium: MediumParams,
                              settings: QuadratureSettings = DEFAULT_QUADRATURE) -> RateResult:
    """Same integral with tanh(beta) replaced by beta (valid for beta << 1)."""
    return _rate(det.omega_tilde, det.beta, medium, settings,
                 det.dimensional_prefactor())


def rate_curve(omega_tilde: float, beta_grid, medium: MediumParams,
               settings: QuadratureSettings = DEFAULT_QUADRATURE,
               low_speed: bool = False) -> CurveTable:
    """Rate as a function of rapidity over a sorted beta grid.

    Rows are independent; trouble in one row (nonconvergence, instability)
    flags that row instead of aborting the curve.
    """
    betas = np.asarray(beta_grid, dtype=float)
    if betas.ndim != 1 or betas.size == 0:
        raise DomainError("beta_grid must be a nonempty 1-d sequence")
    if np.any(np.diff(betas) < 0):
        raise DomainError("beta_grid must be sorted ascending")

    op = transition_rate_low_speed if low_speed else transition_rate
    rows = []
    for beta in betas:
        det = DetectorConfig(omega_tilde=omega_tilde, beta=float(beta))
        try:
            res = op(det, medium, settings)
        except Exception as exc:  # per-row flagging, no global abort
            rows.append((float(beta), math.nan, math.nan, math.nan,
                         f"error:{type(exc).__name__}"))
            continue
        flags = []
        if not res.converged:
            flags.append("nonconverged")
        if res.grazing:
            flags.append("grazing")
        rows.append((
            float(beta), res.value, res.abs_error_estimate,
            res.support.total_measure, ";".join(flags) or "ok",
        ))
    return CurveTable(
        columns=("beta", "rate", "abs_error", "support_measure", "flag"),
        units=("rapidity", "rho0*M_star*g_minus^2*c0^2/(2*pi)^3", "same as rate",
               "dimensionless g", "-"),
        rows=rows,
    )
