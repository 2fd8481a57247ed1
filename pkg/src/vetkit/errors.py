"""Exception types raised by the toolkit."""


class VetkitError(Exception):
    """Base class for all toolkit errors."""


class DomainError(VetkitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NonRealError(VetkitError, ArithmeticError):
    """A correlator that must be real at equal times came back with a
    larger-than-tolerated imaginary residual."""


class ConvergenceError(VetkitError, ArithmeticError):
    """Finite-difference extrapolations at successive step sizes disagree
    beyond the requested tolerance."""


class SpectrumError(VetkitError, ArithmeticError):
    """The partial-transpose symplectic spectrum is complex beyond rounding
    tolerance.  Complex-magnitude diagnostics are attached.

    Attributes:
        nu_minus_magnitude, nu_plus_magnitude: |nu| of the offending roots.
        discriminant: the negative discriminant that triggered the error.
    """

    def __init__(self, message, nu_minus_magnitude=None, nu_plus_magnitude=None,
                 discriminant=None):
        super().__init__(message)
        self.nu_minus_magnitude = nu_minus_magnitude
        self.nu_plus_magnitude = nu_plus_magnitude
        self.discriminant = discriminant


class AsymmetricStateError(VetkitError, ValueError):
    """A symmetric two-mode state (a = a', b = b') was required."""


class OverlapError(VetkitError, ValueError):
    """The two averaging boxes overlap; the small-box construction is
    invalid there."""


class ResolutionError(VetkitError, ValueError):
    """A requested separation does not sit on the lattice."""


class CertificateError(VetkitError):
    """The separability bound failed at one or more grid points.

    Attributes:
        violations: list of (delta_x, big_m, box_size, f_value, bound) rows.
        report: the full certificate report, when available.
    """

    def __init__(self, message, violations=None, report=None):
        super().__init__(message)
        self.violations = violations or []
        self.report = report
