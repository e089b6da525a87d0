"""Quasi-2D dipolar-condensate dispersion and Bogoliubov coefficients.

Density fluctuations on top of a dipole-polarized quasi-2D condensate carry
the quasiparticle spectrum

    omega_k = c0 * k * f(g),        g = c0 * k / M_star,

where c0 is the sound speed, M_star = m*c0^2 sets the energy scale at which
the phonon (sound-cone) dispersion is deformed, and the dimensionless factor

    f(g)^2 = 1 - (3R/2) * sqrt(A) * g * w(sqrt(A/2) * g) + g^2 / 4,
    w(x)   = exp(x^2) * erfc(x),

depends on two dimensionless numbers only: the effective chemical potential
A = g0_eff*rho0/omega_z measured against the transverse trap, and the
dipolar ratio R which runs from 0 (pure contact coupling) to sqrt(pi/2)
(dipole-dominated coupling).  f(0) = 1, so the low-momentum spectrum is an
undeformed sound cone; R > 0 pulls f below 1 at intermediate g and for large
enough A the radicand goes negative, signalling a roton instability.

All dimensionful quantities assume hbar = 1 and a unit system kept
consistent by the caller.  ``derive_scales`` maps lab-frame inputs onto the
dimensionless description; everything downstream works with (A, R, g).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import erfcx

from .errors import DomainError, UnstableSpectrumError

__all__ = [
    "R_DDI",
    "A_C_DDI",
    "MediumParams",
    "PhysicalParams",
    "DerivedScales",
    "BogoliubovPair",
    "w_scaled",
    "f_squared",
    "f_dimensionless",
    "v2d_kernel",
    "omega_physical",
    "bogoliubov_uv",
    "derive_scales",
]

#: Dipole-dominated limit of the dipolar ratio R.
R_DDI = math.sqrt(math.pi / 2)

#: Stability threshold of A in the dipole-dominated regime, as used in the
#: transverse-trap condition omega_z >= 2*m*g_d^2*rho0^2 / (pi * A_C_DDI^2).
#: The numerically refined root of min_g f^2 = 0 at R = R_DDI is 3.44566;
#: this rounded constant is kept for the trap condition only.
A_C_DDI = 3.4454


def _validated_axis(x, name: str):
    """Return ``x`` as a float array, requiring finite nonnegative entries."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    if np.any(arr < 0):
        raise DomainError(f"{name} must be >= 0")
    return arr


def _scalar_like(x, arr):
    return float(arr) if np.ndim(x) == 0 else arr


@dataclass(frozen=True)
class MediumParams:
    """Dimensionless condensate description entering f(g).

    A: effective chemical potential, g0_eff*rho0/omega_z.  Must be > 0.
    R: dipolar ratio in [0, sqrt(pi/2)]; 0 is contact dominance,
       sqrt(pi/2) is dipole (DDI) dominance.
    """

    A: float
    R: float

    def __post_init__(self):
        if not (math.isfinite(self.A) and self.A > 0):
            raise DomainError(f"A must be a positive finite number, got {self.A}")
        # allow R to land on sqrt(pi/2) up to rounding of the caller's arithmetic
        if not (math.isfinite(self.R) and 0.0 <= self.R <= R_DDI * (1 + 1e-12)):
            raise DomainError(
                f"R must lie in [0, sqrt(pi/2) = {R_DDI:.6f}], got {self.R}"
            )


@dataclass(frozen=True)
class PhysicalParams:
    """Lab-frame condensate inputs (hbar = 1, consistent units).

    m: particle mass
    omega: radial trap frequency (enters only the quasi-2D aspect-ratio
        advisory check; may be None if unknown)
    omega_z: transverse trap frequency
    rho0: 2D condensate density (inverse length squared)
    g_c: contact coupling
    g_d: dipolar coupling (>= 0; g_d = 0 means the pure-contact limit R = 0)
    """

    m: float
    omega_z: float
    rho0: float
    g_c: float
    g_d: float
    omega: float | None = None

    def __post_init__(self):
        for name in ("m", "omega_z", "rho0"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be positive and finite, got {v}")
        if self.omega is not None and not (math.isfinite(self.omega) and self.omega > 0):
            raise DomainError(f"omega must be positive and finite, got {self.omega}")
        if not math.isfinite(self.g_c) or not math.isfinite(self.g_d):
            raise DomainError("couplings must be finite")
        if self.g_d < 0:
            raise DomainError(f"g_d must be >= 0, got {self.g_d}")
        if self.g_c + 2 * self.g_d <= 0:
            raise DomainError(
                "g_c + 2*g_d must be positive so that g0_eff > 0 and the "
                f"sound speed is real, got {self.g_c + 2 * self.g_d}"
            )


@dataclass(frozen=True)
class DerivedScales:
    """Scales derived from PhysicalParams.

    g0_eff = (g_c + 2*g_d) / (sqrt(2*pi) * d_z)
    d_z    = 1 / sqrt(m * omega_z)
    c0     = sqrt(g0_eff * rho0 / m)
    M_star = m * c0^2
    A      = g0_eff * rho0 / omega_z
    R      = sqrt(pi/2) / (1 + g_c / (2*g_d))

    ``trap_condition_ok`` records whether omega_z >= omega_z_min, the
    transverse-confinement bound 2*m*g_d^2*rho0^2 / (pi * A_C_DDI^2)
    required for spectrum stability in the dipole-dominated regime.
    """

    g0_eff: float
    d_z: float
    c0: float
    M_star: float
    A: float
    R: float
    omega_z_min: float
    trap_condition_ok: bool

    @property
    def mass(self) -> float:
        return self.M_star / self.c0**2

    @property
    def density(self) -> float:
        return self.M_star / self.g0_eff

    @property
    def medium(self) -> MediumParams:
        return MediumParams(A=self.A, R=self.R)


@dataclass(frozen=True)
class BogoliubovPair:
    """Mode coefficients (u, v) at one wavenumber, with the energies used
    to build them.  Satisfies u^2 - v^2 = 1 and (u+v)^2 = H_k / omega_k."""

    u: float
    v: float
    omega_k: float
    H_k: float
    A_k: float

    @property
    def density_weight(self) -> float:
        """(u + v)^2, the weight of this mode in density fluctuations."""
        return (self.u + self.v) ** 2


def w_scaled(x):
    """Scaled complementary error function w(x) = exp(x^2) * erfc(x), x >= 0.

    Evaluated in overflow-safe form; the literal product overflows for
    x >~ 27 while w itself decays smoothly like 1/(sqrt(pi)*x).  Strictly
    decreasing, with w(0) = 1 and 0 < w <= 1 on [0, inf).

    Accepts a scalar or array; raises DomainError for negative or
    non-finite input.
    """
    arr = _validated_axis(x, "x")
    return _scalar_like(x, erfcx(arr))


def f_squared(g, medium: MediumParams):
    """Radicand f(g)^2 = 1 - (3R/2)*sqrt(A)*g*w(sqrt(A/2)*g) + g^2/4.

    May be negative: a negative value signals spectrum instability at that
    momentum and is meaningful input for the stability analysis, so no
    error is raised here.  f_squared(0) = 1 exactly.
    """
    arr = _validated_axis(g, "g")
    A, R = medium.A, medium.R
    val = 1.0 - 1.5 * R * math.sqrt(A) * arr * erfcx(math.sqrt(A / 2.0) * arr) \
        + 0.25 * arr * arr
    return _scalar_like(g, val)


def f_dimensionless(g, medium: MediumParams):
    """Dispersion factor f(g) = sqrt(f_squared(g)).

    Raises UnstableSpectrumError (carrying the offending g and f^2 value)
    if the radicand is not positive anywhere in the input.
    """
    arr = _validated_axis(g, "g")
    val = np.asarray(f_squared(arr, medium), dtype=float)
    bad = np.flatnonzero(val <= 0.0)  # f^2(0) = 1, so any offender has g > 0
    if bad.size:
        i = bad[0]
        raise UnstableSpectrumError(g=arr.ravel()[i], f_squared=val.ravel()[i])
    return _scalar_like(g, np.sqrt(val))


def v2d_kernel(k, scales: DerivedScales):
    """Quasi-2D interaction kernel in Fourier space (energy * length^2).

    V(k) = g0_eff * (1 - (3R/2) * k*d_z * w(k*d_z/sqrt(2))); V(0) = g0_eff.
    """
    arr = _validated_axis(k, "k")
    x = arr * scales.d_z
    val = scales.g0_eff * (1.0 - 1.5 * scales.R * x * erfcx(x / math.sqrt(2.0)))
    return _scalar_like(k, val)


def _kinetic_interaction(k_arr, scales: DerivedScales):
    H = k_arr * k_arr / (2.0 * scales.mass)
    A_k = scales.density * v2d_kernel(k_arr, scales)
    return H, np.asarray(A_k, dtype=float)


def omega_physical(k, scales: DerivedScales):
    """Quasiparticle frequency omega_k = sqrt(H_k^2 + 2*H_k*A_k).

    H_k = k^2/2m is the free-particle energy and A_k = rho0*V(k) the
    interaction energy.  Agrees with c0*k*f(c0*k/M_star) to rounding.
    Raises UnstableSpectrumError where the radicand is negative.
    """
    arr = _validated_axis(k, "k")
    H, A_k = _kinetic_interaction(arr, scales)
    rad = np.asarray(H * H + 2.0 * H * A_k, dtype=float)
    k_flat = arr.ravel()
    bad = np.flatnonzero((rad.ravel() <= 0.0) & (k_flat > 0))  # rad = 0 is fine at k = 0 only
    if bad.size:
        i = bad[0]
        g = scales.c0 * k_flat[i] / scales.M_star
        raise UnstableSpectrumError(g=g, f_squared=rad.ravel()[i] / (scales.c0 * k_flat[i]) ** 2)
    return _scalar_like(k, np.sqrt(rad))


def bogoliubov_uv(k: float, scales: DerivedScales) -> BogoliubovPair:
    """Bogoliubov coefficients at wavenumber k > 0.

    u = (sqrt(H) + sqrt(H + 2A)) / (2 * (H^2 + 2HA)^(1/4))
    v = (sqrt(H) - sqrt(H + 2A)) / (2 * (H^2 + 2HA)^(1/4))

    The pair diverges as k -> 0 (phonon limit), so k must be strictly
    positive; an unstable momentum raises UnstableSpectrumError.
    """
    k = float(k)
    if not math.isfinite(k) or k <= 0:
        raise DomainError(f"k must be positive and finite, got {k} (u, v diverge as k -> 0)")
    H, A_k = _kinetic_interaction(np.asarray(k, dtype=float), scales)
    H = float(H)
    A_k = float(A_k)
    rad = H * H + 2.0 * H * A_k
    if rad <= 0 or H + 2.0 * A_k <= 0:
        g = scales.c0 * k / scales.M_star
        raise UnstableSpectrumError(g=g, f_squared=rad / (scales.c0 * k) ** 2)
    omega = math.sqrt(rad)
    quarter = rad**0.25
    s_plus = math.sqrt(H + 2.0 * A_k)
    s_h = math.sqrt(H)
    return BogoliubovPair(
        u=(s_h + s_plus) / (2.0 * quarter),
        v=(s_h - s_plus) / (2.0 * quarter),
        omega_k=omega,
        H_k=H,
        A_k=A_k,
    )


def derive_scales(phys: PhysicalParams, kappa_warning: float = 10.0) -> DerivedScales:
    """Map lab-frame parameters to the derived scales and (A, R).

    Emits a UserWarning (never an error) when the aspect ratio
    kappa = omega_z/omega falls below ``kappa_warning``, since the quasi-2D
    reduction assumes kappa >> 1.  Also evaluates the transverse-trap
    stability bound and stores the outcome in ``trap_condition_ok``.
    """
    d_z = 1.0 / math.sqrt(phys.m * phys.omega_z)
    g0_eff = (phys.g_c + 2.0 * phys.g_d) / (math.sqrt(2.0 * math.pi) * d_z)
    c0_sq = g0_eff * phys.rho0 / phys.m
    if not c0_sq > 0:
        raise DomainError(f"derived c0^2 = {c0_sq} is not positive")
    c0 = math.sqrt(c0_sq)
    M_star = phys.m * c0_sq
    A = g0_eff * phys.rho0 / phys.omega_z
    R = 0.0 if phys.g_d == 0 else R_DDI / (1.0 + phys.g_c / (2.0 * phys.g_d))
    MediumParams(A=A, R=R)  # validates the (A, R) ranges, e.g. rejects g_c < 0

    if phys.omega is not None:
        kappa = phys.omega_z / phys.omega
        if kappa < kappa_warning:
            warnings.warn(
                f"aspect ratio kappa = omega_z/omega = {kappa:.3g} < "
                f"{kappa_warning:g}; the quasi-2D reduction assumes kappa >> 1",
                UserWarning,
                stacklevel=2,
            )

    omega_z_min = 2.0 * phys.m * phys.g_d**2 * phys.rho0**2 / (math.pi * A_C_DDI**2)
    return DerivedScales(
        g0_eff=g0_eff,
        d_z=d_z,
        c0=c0,
        M_star=M_star,
        A=A,
        R=R,
        omega_z_min=omega_z_min,
        trap_condition_ok=bool(phys.omega_z >= omega_z_min),
    )
