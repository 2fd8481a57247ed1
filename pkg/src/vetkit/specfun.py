"""Numerically careful scalar kernels shared by the correlator modules.

Every function here has a direct-evaluation branch and a series branch;
the series takes over where the direct expression loses digits to
cancellation (small arguments) or overflows (large hyperbolic arguments).
All functions are pure and thread-safe.
"""

from __future__ import annotations

import cmath
import math

_PI = math.pi
_ZETA2 = _PI ** 2 / 6.0
_ZETA4 = _PI ** 4 / 90.0
_ZETA6 = _PI ** 6 / 945.0
_ZETA8 = _PI ** 8 / 9450.0


def log_sinc(w: complex) -> complex:
    """log(sin(w) / w) on the principal branch, finite at w = 0.

    For |w| < 0.03 the direct quotient is 1 + O(1e-4) and the log loses
    relative precision, so a four-term zeta series in (w/pi)^2 is used
    (error below 1e-16 relative there).
    """
    w = complex(w)
    if w == 0:
        return 0j
    if abs(w) < 0.03:
        v = (w / _PI) ** 2
        return -((_ZETA2 + (_ZETA4 / 2 + (_ZETA6 / 3 + (_ZETA8 / 4) * v) * v) * v) * v)
    return cmath.log(cmath.sin(w) / w)


def log_x_csch_x(y: float) -> float:
    """log(y / sinh(y)) for y >= 0, with y = 0 mapping to 0.

    Equals -log(sinh(y)/y); <= 0 everywhere, 0 only at y = 0.
    """
    if y < 0.0:
        raise ValueError("log_x_csch_x expects y >= 0")
    if y == 0.0:
        return 0.0
    if y < 0.03:
        y2 = y * y
        # log(sinh y / y) = y^2/6 - y^4/180 + y^6/2835 - ...
        return -(y2 / 6.0 - y2 * y2 / 180.0 + y2 * y2 * y2 / 2835.0)
    if y <= 350.0:
        return math.log(y / math.sinh(y))
    # sinh overflows well before 710; use sinh y = e^y (1 - e^{-2y}) / 2
    return math.log(y) + math.log(2.0) - y - math.log1p(-math.exp(-2.0 * y))


def inv_sq_minus_csc_sq(delta_x: float, radius: float = 1.0) -> float:
    """1/delta_x^2 - (pi/radius)^2 * csc^2(pi delta_x / radius).

    The two terms cancel to -(pi/radius)^2/3 as delta_x -> 0; below
    z = pi dx / R = 0.2 a Laurent-tail series keeps full precision.
    """
    z = _PI * delta_x / radius
    if z <= 0.0 or z >= _PI:
        raise ValueError("separation must satisfy 0 < delta_x < radius")
    if z < 0.2:
        z2 = z * z
        tail = (1.0 / 3.0
                + z2 * (1.0 / 15.0
                        + z2 * (2.0 / 189.0
                                + z2 * (1.0 / 675.0 + z2 * (2.0 / 10395.0)))))
        return -((_PI / radius) ** 2) * tail
    s = math.sin(z)
    return 1.0 / (delta_x * delta_x) - (_PI / radius) ** 2 / (s * s)


def log_sin2_sinh2_ratio(x: float, y: float) -> float:
    """log((sin^2 x + sinh^2 y) / (x^2 + y^2)) for x, y >= 0, not both 0.

    This is the equal-time building block of the regularized correlator:
    sin^2 x + sinh^2 y = |sin(x + iy)|^2 and x^2 + y^2 = |x + iy|^2.
    """
    if x < 0.0 or y < 0.0:
        raise ValueError("log_sin2_sinh2_ratio expects x, y >= 0")
    t = x * x + y * y
    if t == 0.0:
        return 0.0
    if x < 1e-4 and y < 1e-4:
        # ratio = 1 + (y^2 - x^2)/3 + (2/45)(x^6 + y^6)/(x^2 + y^2) + O(z^6)
        u = (y * y - x * x) / 3.0 + (2.0 / 45.0) * (x ** 6 + y ** 6) / t
        return u - 0.5 * u * u
    if y <= 350.0:
        s = math.sin(x)
        sh = math.sinh(y)
        return math.log((s * s + sh * sh) / t)
    e = math.exp(-2.0 * y)
    s = math.sin(x)
    return (2.0 * y - math.log(4.0)
            + math.log((1.0 - e) ** 2 + 4.0 * e * s * s) - math.log(t))
