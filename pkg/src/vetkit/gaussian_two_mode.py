"""Two-mode Gaussian covariance machinery: the Simon separability quantity,
partial-transpose symplectic spectrum, negativities, and a physicality
diagnostic.

Convention: [Phi, Pi] = i, so the vacuum quadrature variance is 1/2 and
the separability boundary sits at partial-transpose symplectic eigenvalue
1/2.  All functions are pure over value types and thread-safe; reports are
immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import AsymmetricStateError, SpectrumError
from .greens_cylinder import CovarianceComponents

VACUUM_VARIANCE = 0.5

# Symplectic form for the ordering (Phi, Pi, Phi', Pi').
OMEGA = np.array([[0.0, 1.0, 0.0, 0.0],
                  [-1.0, 0.0, 0.0, 0.0],
                  [0.0, 0.0, 0.0, 1.0],
                  [0.0, 0.0, -1.0, 0.0]])


def det2(m) -> float:
    return float(m[0][0]) * float(m[1][1]) - float(m[0][1]) * float(m[1][0])


def _det3(m) -> float:
    return (float(m[0][0]) * (float(m[1][1]) * float(m[2][2]) - float(m[1][2]) * float(m[2][1]))
            - float(m[0][1]) * (float(m[1][0]) * float(m[2][2]) - float(m[1][2]) * float(m[2][0]))
            + float(m[0][2]) * (float(m[1][0]) * float(m[2][1]) - float(m[1][1]) * float(m[2][0])))


def det4(m) -> float:
    """Explicit cofactor expansion along the first row; no linear-algebra
    dependency is needed at this size and the result is deterministic."""
    m = np.asarray(m, dtype=float)
    total = 0.0
    sign = 1.0
    for j in range(4):
        rows = [1, 2, 3]
        cols = [c for c in range(4) if c != j]
        minor = m[np.ix_(rows, cols)]
        total += sign * float(m[0, j]) * _det3(minor)
        sign = -sign
    return total


@dataclass(frozen=True)
class TwoModeCovariance:
    """4x4 symmetric covariance matrix over (Phi, Pi, Phi', Pi').

    box_size and dimension record the averaging box that produced the
    matrix (L and D); they do not enter the matrix entries themselves.
    Physicality (V + i Omega/2 >= 0) is a checkable predicate, not an
    invariant: regularized matrices deliberately violate it.
    """

    entries: np.ndarray
    box_size: float = 1.0
    dimension: int = 1

    def __post_init__(self):
        m = np.array(self.entries, dtype=float)
        if m.shape != (4, 4):
            raise ValueError("covariance matrix must be 4x4")
        if not np.array_equal(m, m.T):
            raise ValueError("covariance matrix must be exactly symmetric "
                             "as stored")
        if self.dimension < 1 or int(self.dimension) != self.dimension:
            raise ValueError("dimension must be a positive integer")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    def block_a(self) -> np.ndarray:
        return self.entries[:2, :2]

    def block_b(self) -> np.ndarray:
        return self.entries[2:, 2:]

    def block_g(self) -> np.ndarray:
        return self.entries[:2, 2:]


def vacuum_covariance() -> TwoModeCovariance:
    return TwoModeCovariance(np.eye(4) * VACUUM_VARIANCE, box_size=1.0)


def two_mode_squeezed_covariance(r: float) -> TwoModeCovariance:
    """Two-mode squeezed vacuum: a = b = cosh(2r)/2, c = -d = sinh(2r)/2."""
    ch = 0.5 * math.cosh(2.0 * r)
    sh = 0.5 * math.sinh(2.0 * r)
    m = np.zeros((4, 4))
    m[0, 0] = m[1, 1] = m[2, 2] = m[3, 3] = ch
    m[0, 2] = m[2, 0] = sh
    m[1, 3] = m[3, 1] = -sh
    return TwoModeCovariance(m, box_size=1.0)


def pt_invariants(v: TwoModeCovariance) -> tuple[float, float]:
    """(delta_tilde, det V): the partial-transpose seralian and the full
    determinant.  delta_tilde = det A + det B - 2 det G."""
    delta = det2(v.block_a()) + det2(v.block_b()) - 2.0 * det2(v.block_g())
    return delta, det4(v.entries)


def simon_f(v: TwoModeCovariance) -> float:
    """Separability quantity F = Sigma~ - (1/4 + 4 det V); F <= 0 marks a
    positive partial transpose."""
    delta, detv = pt_invariants(v)
    return delta - (0.25 + 4.0 * detv)


def simon_f_closed(comp: CovarianceComponents, box_size: float,
                   dimension: int = 1) -> float:
    """F evaluated directly from the covariance scalars, without assembling
    the matrix:

        F = -1/4 + L^2D [ab + a'b' - 2cd]
                 - 4 L^4D [a a' b b' - a a' d^2 - c^2 b b' + c^2 d^2]
    """
    lam = box_size ** (2 * dimension)
    a, b, c, d = comp.a, comp.b, comp.c, comp.d
    ap, bp = comp.a_prime, comp.b_prime
    quad = a * b + ap * bp - 2.0 * c * d
    quart = a * ap * b * bp - a * ap * d * d - c * c * b * bp + c * c * d * d
    return -0.25 + lam * quad - 4.0 * lam * lam * quart


def pt_symplectic_squares(v: TwoModeCovariance) -> tuple[float, float]:
    """Signed squares of the partial-transpose symplectic eigenvalues.

    nu^2 = (delta_tilde +/- sqrt(delta_tilde^2 - 4 det V)) / 2.  For
    non-physical input either square may come out negative (imaginary
    eigenvalue); callers needing magnitudes take sqrt(|. |).
    """
    delta, detv = pt_invariants(v)
    disc = delta * delta - 4.0 * detv
    scale = max(1.0, delta * delta, abs(4.0 * detv))
    if disc < -1e-9 * scale:
        root = math.sqrt(-disc)
        mag = (delta * delta + root * root) ** 0.25 / math.sqrt(2.0)
        raise SpectrumError(
            "partial-transpose symplectic spectrum is complex: "
            f"discriminant {disc:.3e}",
            nu_minus_magnitude=mag, nu_plus_magnitude=mag, discriminant=disc)
    disc = max(disc, 0.0)
    root = math.sqrt(disc)
    return (delta - root) / 2.0, (delta + root) / 2.0


class PtSpectrum(NamedTuple):
    nu_minus: float
    nu_plus: float


def symplectic_spectrum_pt(v: TwoModeCovariance) -> PtSpectrum:
    """Magnitudes of the partial-transpose symplectic eigenvalues.

    The partial transpose flips the momentum of the second mode, which at
    the level of invariants replaces det G by -det G.  For input whose
    squared eigenvalues come out negative (possible for regularized,
    non-physical matrices) the complex magnitude sqrt(|nu^2|) is reported.
    """
    nm_sq, np_sq = pt_symplectic_squares(v)
    return PtSpectrum(math.sqrt(abs(nm_sq)), math.sqrt(abs(np_sq)))


def _require_symmetric(comp: CovarianceComponents) -> None:
    if (abs(comp.a - comp.a_prime) > 1e-12 * max(1.0, abs(comp.a))
            or abs(comp.b - comp.b_prime) > 1e-12 * max(1.0, abs(comp.b))):
        raise AsymmetricStateError(
            "negativity formula requires a = a' and b = b'")


def negativity_symmetric(comp: CovarianceComponents, box_size: float,
                         dimension: int = 1, *, rescaled: bool = True,
                         ppt_gated: bool = True) -> float:
    """Negativity of a symmetric state from its covariance scalars:

        E = max{0, 1 / (L^2D (a - |c|)(b - |d|)) - 1},

    applied in the unit-vacuum convention, i.e. with the components
    doubled first (``rescaled``); this pins E = 0 exactly on the
    separability boundary.  For a positive-partial-transpose state the
    negativity is zero by definition, so the formula is only evaluated
    when F > 0 (``ppt_gated``); with ``ppt_gated=False`` (and optionally
    ``rescaled=False``) the raw arithmetic value is returned as a
    diagnostic.
    """
    _require_symmetric(comp)
    if ppt_gated and simon_f_closed(comp, box_size, dimension) <= 0.0:
        return 0.0
    s = 2.0 if rescaled else 1.0
    lam = box_size ** (2 * dimension)
    denom = lam * (s * comp.a - abs(s * comp.c)) * (s * comp.b - abs(s * comp.d))
    if denom == 0.0:
        return math.inf
    return max(0.0, 1.0 / denom - 1.0)


def negativity_standard(v: TwoModeCovariance) -> float:
    """Standard negativity (1 - 2 nu-) / (2 nu-), clipped at zero.

    Zero whenever F <= 0 (positive partial transpose); for non-physical
    matrices with an imaginary nu- it is likewise zero when F <= 0.
    """
    if simon_f(v) <= 0.0:
        return 0.0
    nm_sq, _ = pt_symplectic_squares(v)
    if nm_sq <= 0.0:
        return math.inf
    nu = math.sqrt(nm_sq)
    return max(0.0, (1.0 - 2.0 * nu) / (2.0 * nu))


@dataclass(frozen=True)
class PhysicalityReport:
    """Minimum eigenvalue of V + i Omega/2; negative means the matrix is
    not the covariance of any quantum state."""

    min_eigenvalue: float
    physical: bool


def physicality_check(v: TwoModeCovariance,
                      tolerance: float = 1e-10) -> PhysicalityReport:
    """Heisenberg-condition diagnostic; never raises.  Regularized
    covariance matrices are expected to fail it, and the report records
    that."""
    h = v.entries.astype(complex) + 0.5j * OMEGA
    eigs = np.linalg.eigvalsh(h)
    m = float(eigs[0])
    return PhysicalityReport(min_eigenvalue=m, physical=m >= -tolerance)


VERDICT_SEPARABLE = "PPT-separable"
VERDICT_ENTANGLED = "NPT-entangled"


@dataclass(frozen=True)
class SeparabilityReport:
    f_value: float
    sigma_tilde: float
    det_v: float
    nu_minus: float
    nu_plus: float
    pt_spectrum_real: bool
    negativity_symmetric: float
    negativity_standard: float
    verdict: str
    physicality_min_eigenvalue: float


def _components_from_matrix(v: TwoModeCovariance) -> CovarianceComponents:
    lam = v.box_size ** (2 * v.dimension)
    e = v.entries
    if lam == 0.0:
        return CovarianceComponents(e[0, 0], 0.0, e[0, 2], 0.0, e[2, 2], 0.0)
    return CovarianceComponents(e[0, 0], e[1, 1] / lam, e[0, 2], e[1, 3] / lam,
                                e[2, 2], e[3, 3] / lam)


def separability_report(v: TwoModeCovariance,
                        comp: CovarianceComponents | None = None) -> SeparabilityReport:
    """Full separability diagnostics for a two-mode covariance matrix.

    The verdict follows the sign of F.  The nu- >= 1/2 reading is
    equivalent only for matrices with delta_tilde >= 1/2; for regularized
    matrices the spectrum may even be imaginary, which
    ``pt_spectrum_real`` records.
    """
    if comp is None:
        comp = _components_from_matrix(v)
    f = simon_f(v)
    delta, detv = pt_invariants(v)
    disc = max(delta * delta - 4.0 * detv, 0.0)
    root = math.sqrt(disc)
    nm_sq = (delta - root) / 2.0
    np_sq = (delta + root) / 2.0
    try:
        neg_sym = negativity_symmetric(comp, v.box_size, v.dimension)
    except AsymmetricStateError:
        neg_sym = math.nan
    return SeparabilityReport(
        f_value=f,
        sigma_tilde=delta,
        det_v=detv,
        nu_minus=math.sqrt(abs(nm_sq)),
        nu_plus=math.sqrt(abs(np_sq)),
        pt_spectrum_real=nm_sq >= -1e-14 * max(1.0, abs(np_sq)),
        negativity_symmetric=neg_sym,
        negativity_standard=negativity_standard(v),
        verdict=VERDICT_SEPARABLE if f <= 0.0 else VERDICT_ENTANGLED,
        physicality_min_eigenvalue=physicality_check(v).min_eigenvalue,
    )
