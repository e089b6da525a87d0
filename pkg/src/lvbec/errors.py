"""Exception types shared across the library."""


class LvbecError(Exception):
    """Base class for all lvbec-specific errors."""


class DomainError(LvbecError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class UnstableSpectrumError(LvbecError):
    """The quasiparticle spectrum has f^2(g) <= 0 somewhere.

    Carries the dimensionless momentum ``g`` where the violation was
    detected and the value of ``f_squared`` there.
    """

    def __init__(self, g: float, f_squared: float, message: str | None = None):
        self.g = float(g)
        self.f_squared = float(f_squared)
        if message is None:
            message = (
                f"unstable quasiparticle spectrum: f^2(g={self.g:.9g}) = "
                f"{self.f_squared:.6g} <= 0"
            )
        super().__init__(message)


class NoInstabilityError(LvbecError):
    """The spectrum never destabilizes over the searched A bracket.

    Raised by the stability-boundary search when min_g f^2 stays positive,
    which happens for R = 0 and more generally for any R below the
    threshold sqrt(2*pi)/3 where the dipolar term cannot overcome the
    contact repulsion at any A.
    """


class SweepValidationError(LvbecError, ValueError):
    """A sweep specification failed validation.

    ``violations`` lists every problem found, not just the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid sweep spec: " + "; ".join(self.violations))
