"""lvbec: deformed Bogoliubov dispersion of a quasi-2D dipolar condensate
and the transition rate of a uniformly moving impurity detector.

The library works on a dimensionless description of the medium, the pair
(A, R): A is the effective chemical potential against the transverse trap
and R in [0, sqrt(pi/2)] the dipolar ratio.  The quasiparticle spectrum is
omega_k = c0*k*f(c0*k/M_star); for R > 0 the factor f dips below 1, which
lets a detector dragged faster than c0*tanh(beta_c) = c0*f_c get excited
spontaneously at arbitrarily small positive gap.  See the README for the
formulas, the CLI, and the sweep presets.
"""

__version__ = "0.1.0"

from .dispersion import (
    A_C_DDI,
    BogoliubovPair,
    DerivedScales,
    MediumParams,
    PhysicalParams,
    R_DDI,
    bogoliubov_uv,
    derive_scales,
    f_dimensionless,
    f_squared,
    omega_physical,
    v2d_kernel,
    w_scaled,
)
from .errors import (
    DomainError,
    LvbecError,
    NoInstabilityError,
    SweepValidationError,
    UnstableSpectrumError,
)
from .spectrum import (
    CLASS_DIP,
    CLASS_MONOTONE,
    CLASS_ROTONIZED,
    CLASS_UNSTABLE,
    SpectrumFeatures,
    classify,
    critical_A,
    critical_rapidity,
    min_f,
)
from .rate import (
    DetectorConfig,
    QuadratureSettings,
    RateResult,
    SupportInterval,
    SupportSet,
    excitation_window,
    rate_curve,
    support_set,
    transition_rate,
    transition_rate_low_speed,
)
from .tables import CurveTable
from .sweep import (
    AxisSpec,
    SweepSpec,
    parse_config,
    preset_fig1,
    preset_fig2,
    preset_fig3,
    run_sweep,
    validate_preset_table,
)

__all__ = [
    "__version__",
    "A_C_DDI",
    "R_DDI",
    "AxisSpec",
    "BogoliubovPair",
    "CLASS_DIP",
    "CLASS_MONOTONE",
    "CLASS_ROTONIZED",
    "CLASS_UNSTABLE",
    "CurveTable",
    "DerivedScales",
    "DetectorConfig",
    "DomainError",
    "LvbecError",
    "MediumParams",
    "NoInstabilityError",
    "PhysicalParams",
    "QuadratureSettings",
    "RateResult",
    "SpectrumFeatures",
    "SupportInterval",
    "SupportSet",
    "SweepSpec",
    "SweepValidationError",
    "UnstableSpectrumError",
    "bogoliubov_uv",
    "classify",
    "critical_A",
    "critical_rapidity",
    "derive_scales",
    "excitation_window",
    "f_dimensionless",
    "f_squared",
    "min_f",
    "omega_physical",
    "parse_config",
    "preset_fig1",
    "preset_fig2",
    "preset_fig3",
    "rate_curve",
    "run_sweep",
    "support_set",
    "transition_rate",
    "transition_rate_low_speed",
    "v2d_kernel",
    "validate_preset_table",
    "w_scaled",
]
