"""Thermal symmetrized correlator of a massive scalar field on a spatial
circle, its flat-space large-circle limit, and the regularized difference
from which the covariance components are extracted.

Conventions
-----------
Light-cone separations are du = -dx + dt and dv = dx + dt.  The mass and
inverse temperature enter only through the dimensionless product
M = mass * beta, which shifts the light-cone arguments by i*M.  Spatial
separations live on a circle of circumference ``radius`` and are reduced
to the nearest image, i.e. into [0, radius/2]; the flat-space subtraction
is taken at that geodesic separation, which makes every output symmetric
under delta_x -> radius - delta_x.

The correlator is evaluated with complex sine and principal-branch
complex log; the real part is returned and the magnitude of the discarded
imaginary part is recorded.  At equal times the expression is exactly
real, and residuals above tolerance raise ``NonRealError``.

All operations are pure functions of their arguments; there is no shared
mutable state, so everything here is safe to call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, NonRealError
from .specfun import (
    inv_sq_minus_csc_sq,
    log_sin2_sinh2_ratio,
    log_sinc,
    log_x_csch_x,
)

_PI = math.pi

# Below this fraction of the circumference (for all of |dx|, |dt|, M) the
# direct subtraction of the two correlators loses ~10 digits to
# cancellation; the log-sinc series path takes over.
SERIES_CROSSOVER = 1e-3

# Equal-time results must be real to this relative tolerance.
EQUAL_TIME_RESIDUAL_TOL = 1e-12

# sinh(pi*M/R) overflows double precision past this point.
_BIG_M_OVERFLOW = 300.0 / _PI


def fold_separation(delta_x: float, radius: float = 1.0) -> float:
    """Reduce a spatial separation to the fundamental domain [0, radius/2].

    Two points on the circle are the same pair whichever way around one
    measures, so 0.8 R and 0.2 R label identical configurations.
    """
    x = math.fmod(abs(delta_x), radius)
    if x > 0.5 * radius:
        x = radius - x
    return x


@dataclass(frozen=True)
class CylinderPoint:
    """Separation / mass-temperature point at which correlators are evaluated.

    Fields:
        delta_x: spatial separation, reduced on construction to [0, radius/2].
        delta_t: time separation (the time direction is not compact).
        big_m:   dimensionless mass * inverse-temperature product, >= 0.
        radius:  circumference of the spatial circle, > 0.
    """

    delta_x: float
    delta_t: float = 0.0
    big_m: float = 0.0
    radius: float = 1.0

    def __post_init__(self):
        if not (self.radius > 0.0) or not math.isfinite(self.radius):
            raise DomainError("radius must be positive and finite")
        if self.big_m < 0.0 or not math.isfinite(self.big_m):
            raise DomainError("big_m must be finite and >= 0")
        if not math.isfinite(self.delta_x) or not math.isfinite(self.delta_t):
            raise DomainError("separations must be finite")
        if self.big_m > _BIG_M_OVERFLOW * self.radius:
            raise DomainError(
                "big_m too large: sinh(pi*M/R) overflows double precision")
        object.__setattr__(self, "delta_x",
                           fold_separation(self.delta_x, self.radius))

    @property
    def delta_u(self) -> float:
        return -self.delta_x + self.delta_t

    @property
    def delta_v(self) -> float:
        return self.delta_x + self.delta_t


@dataclass(frozen=True)
class GreensValue:
    """Real correlator amplitude plus the discarded imaginary magnitude."""

    value: float
    imaginary_residual: float


def _check_residual(z: complex, point: CylinderPoint, opname: str) -> GreensValue:
    value = z.real
    residual = abs(z.imag)
    if point.delta_t == 0.0:
        if residual > EQUAL_TIME_RESIDUAL_TOL * max(1.0, abs(value)):
            raise NonRealError(
                f"{opname}: equal-time result has imaginary residual "
                f"{residual:.3e} (value {value:.6e})")
    return GreensValue(value, residual)


def _shifted_sines(point: CylinderPoint) -> complex:
    """sin(pi (du + iM)/R) * sin(pi (dv + iM)/R)."""
    wu = _PI * complex(point.delta_u, point.big_m) / point.radius
    wv = _PI * complex(point.delta_v, point.big_m) / point.radius
    return cmath.sin(wu) * cmath.sin(wv)


def _hadamard_complex(point: CylinderPoint) -> complex:
    s = _shifted_sines(point)
    if s == 0:
        raise DomainError(
            "correlator singular: null or coincident separation at M = 0")
    return -cmath.log(16.0 * s * s) / (4.0 * _PI)


def _free_space_complex(point: CylinderPoint) -> complex:
    zu = complex(point.delta_u, point.big_m)
    zv = complex(point.delta_v, point.big_m)
    q = (_PI * zu) * (_PI * zv)
    if q == 0:
        raise DomainError(
            "flat-space correlator singular: null or coincident separation "
            "at M = 0")
    # The log(R)/pi constant keeps the regularized difference finite and
    # consistent for every finite radius.
    return -cmath.log(16.0 * q * q) / (4.0 * _PI) + math.log(point.radius) / _PI


def hadamard_g(point: CylinderPoint) -> GreensValue:
    """Thermal symmetrized two-point correlator on the circle.

    At equal times the product of shifted sines is -(sin^2(pi dx/R) +
    sinh^2(pi M/R)), so its square is positive and the result exactly real.
    """
    return _check_residual(_hadamard_complex(point), point, "hadamard_g")


def free_space_g0(point: CylinderPoint) -> GreensValue:
    """Large-circle (flat-space) limit of the correlator.

    Contains the explicit log(radius)/pi constant, so that the difference
    hadamard_g - free_space_g0 is finite and radius-consistent.
    """
    return _check_residual(_free_space_complex(point), point, "free_space_g0")


def regularized_gr(point: CylinderPoint) -> GreensValue:
    """Regularized correlator: hadamard_g minus free_space_g0.

    Finite at coincident points for every M >= 0 (the divergences cancel).
    Near coincidence, where the direct subtraction suffers catastrophic
    cancellation, the difference collapses to

        -(1/2 pi) [log sinc(pi zu / R) + log sinc(pi zv / R)],

    which the series branch of ``log_sinc`` evaluates to full precision.
    """
    small = SERIES_CROSSOVER * point.radius
    if (abs(point.delta_x) < small and abs(point.delta_t) < small
            and point.big_m < small):
        wu = _PI * complex(point.delta_u, point.big_m) / point.radius
        wv = _PI * complex(point.delta_v, point.big_m) / point.radius
        z = -(log_sinc(wu) + log_sinc(wv)) / (2.0 * _PI)
    else:
        z = _hadamard_complex(point) - _free_space_complex(point)
    return _check_residual(z, point, "regularized_gr")


@dataclass(frozen=True)
class CovarianceComponents:
    """Regularized covariance scalars (a, b, c, d, a', b').

    a, a': field-field variances at a point; b, b': momentum-momentum
    variances; c: field-field at separation; d: momentum-momentum at
    separation.  On a homogeneous circle a' = a and b' = b.
    """

    a: float
    b: float
    c: float
    d: float
    a_prime: float
    b_prime: float

    @classmethod
    def symmetric(cls, a: float, b: float, c: float, d: float) -> "CovarianceComponents":
        return cls(a, b, c, d, a, b)


def _validate_component_args(delta_x: float, big_m: float, radius: float) -> float:
    if not (radius > 0.0):
        raise DomainError("radius must be positive")
    if big_m < 0.0:
        raise DomainError("big_m must be >= 0")
    dx = fold_separation(delta_x, radius)
    if dx == 0.0:
        raise DomainError(
            "delta_x must be strictly between 0 and radius "
            "(the momentum component d is singular at coincidence)")
    return dx


def components_closed_form(delta_x: float, big_m: float,
                           radius: float = 1.0) -> CovarianceComponents:
    """Closed-form covariance components at geodesic separation delta_x.

    M = 0 is handled by the analytic limits: a = 0 and the separation
    kernel of c reduces to its massless form.  Note d carries no M
    dependence in this closed form; ``components_numeric`` provides the
    independent correlator-derivative path against which that is checked.
    """
    dx = _validate_component_args(delta_x, big_m, radius)
    x = _PI * dx / radius
    y = _PI * big_m / radius
    a = log_x_csch_x(y) / (2.0 * _PI)
    b = -_PI / (6.0 * radius * radius)
    c = -log_sin2_sinh2_ratio(x, y) / (4.0 * _PI)
    d = inv_sq_minus_csc_sq(dx, radius) / (2.0 * _PI)
    return CovarianceComponents.symmetric(a, b, c, d)


def _mixed_time_derivative(delta_x: float, big_m: float, radius: float,
                           h: float, tolerance: float) -> float:
    """d_t d_t' of regularized_gr / 2 at equal times.

    Four-point central stencil in the two time arguments (which collapses
    to a second difference in dt with step 2h), evaluated at three step
    sizes with Richardson extrapolation.  The two extrapolants must agree
    within ``tolerance`` or ``ConvergenceError`` is raised.
    """
    def gr(dt: float) -> float:
        return regularized_gr(
            CylinderPoint(delta_x, dt, big_m, radius)).value

    g_center = gr(0.0)

    def estimate(step: float) -> float:
        return (2.0 * g_center - gr(2.0 * step) - gr(-2.0 * step)) / (8.0 * step * step)

    d1 = estimate(h)
    d2 = estimate(h / 2.0)
    d3 = estimate(h / 4.0)
    e1 = (4.0 * d2 - d1) / 3.0
    e2 = (4.0 * d3 - d2) / 3.0
    if abs(e1 - e2) > tolerance * max(1.0, abs(e2)):
        raise ConvergenceError(
            f"mixed time derivative did not converge: extrapolants differ "
            f"by {abs(e1 - e2):.3e} at steps {h:g} and {h / 2:g}")
    return e2


def components_numeric(delta_x: float, big_m: float, radius: float = 1.0,
                       step: float = 1e-3,
                       tolerance: float = 1e-6) -> CovarianceComponents:
    """Covariance components from numeric limits of the regularized correlator.

    c is the equal-time value divided by two, d the mixed second time
    derivative by central finite differences (step = ``step * radius``)
    with Richardson extrapolation, and a, b the same quantities in the
    coincidence limit via the series-safe path of ``regularized_gr``.
    """
    dx = _validate_component_args(delta_x, big_m, radius)
    if not (step > 0.0):
        raise DomainError("finite-difference step must be positive")
    h = step * radius
    c = 0.5 * regularized_gr(CylinderPoint(dx, 0.0, big_m, radius)).value
    a = 0.5 * regularized_gr(CylinderPoint(0.0, 0.0, big_m, radius)).value
    d = _mixed_time_derivative(dx, big_m, radius, h, tolerance)
    b = _mixed_time_derivative(0.0, big_m, radius, h, tolerance)
    return CovarianceComponents.symmetric(a, b, c, d)
