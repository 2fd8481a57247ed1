"""Effective two-mode covariance of box-averaged field and box-integrated
momentum operators.

In the small-box limit the averaged-field entries carry no box factor
while the integrated-momentum entries pick up L^(2D); the construction
below is that identification taken as the definition (no finite-box
convolution corrections).  Pure construction, thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverlapError
from .gaussian_two_mode import TwoModeCovariance
from .greens_cylinder import CovarianceComponents, components_closed_form, fold_separation


@dataclass(frozen=True)
class CollectiveSpec:
    """Two averaging boxes of linear size box_size on the circle, plus the
    covariance components evaluated at the separation of their centers."""

    box_size: float
    center_1: float
    center_2: float
    components: CovarianceComponents
    dimension: int = 1
    radius: float = 1.0

    def __post_init__(self):
        if not (self.box_size > 0.0):
            raise DomainError("box_size must be positive")
        if not (self.radius > 0.0):
            raise DomainError("radius must be positive")
        if self.dimension < 1 or int(self.dimension) != self.dimension:
            raise DomainError("dimension must be a positive integer")
        if not (self.box_size < 0.5 * self.radius):
            raise DomainError("box must be smaller than half the circle")
        if self.separation <= self.box_size:
            raise OverlapError(
                "boxes overlap (separation {:.6g} <= box size {:.6g}); the "
                "small-box identification is invalid there".format(
                    self.separation, self.box_size))

    @property
    def separation(self) -> float:
        return fold_separation(self.center_2 - self.center_1, self.radius)


def collective_spec_on_cylinder(box_size: float, center_1: float, center_2: float,
                                big_m: float, radius: float = 1.0) -> CollectiveSpec:
    """Build a CollectiveSpec with components taken from the closed-form
    cylinder correlators at the center separation."""
    sep = fold_separation(center_2 - center_1, radius)
    comp = components_closed_form(sep, big_m, radius)
    if comp.a != comp.a_prime or comp.b != comp.b_prime:
        raise DomainError("cylinder components must be homogeneous (a = a', b = b')")
    return CollectiveSpec(box_size, center_1, center_2, comp, 1, radius)


def build_v_tilde(spec: CollectiveSpec,
                  momentum_averaged: bool = False) -> TwoModeCovariance:
    """Assemble the effective 4x4 covariance.

    Diagonal blocks diag(a, L^2D b) and diag(a', L^2D b'), off-diagonal
    block diag(c, L^2D d).  With ``momentum_averaged`` the momenta are
    averaged instead of integrated, which removes the L^2D factor from
    the momentum rows (same sign of the separability quantity for the
    cylinder family; the values differ).
    """
    comp = spec.components
    lam = 1.0 if momentum_averaged else spec.box_size ** (2 * spec.dimension)
    m = np.zeros((4, 4))
    m[0, 0] = comp.a
    m[1, 1] = lam * comp.b
    m[2, 2] = comp.a_prime
    m[3, 3] = lam * comp.b_prime
    m[0, 2] = m[2, 0] = comp.c
    m[1, 3] = m[3, 1] = lam * comp.d
    return TwoModeCovariance(m, box_size=spec.box_size, dimension=spec.dimension)


def _arc_overlap(center_a: float, center_b: float, width: float,
                 radius: float) -> float:
    d = fold_separation(center_b - center_a, radius)
    return max(0.0, width - d)


def collective_commutator_norm(spec: CollectiveSpec) -> np.ndarray:
    """Coefficients of i in [Phi_i, Pi_j] implied by the averaging and
    integration weights: (1/L^D) * |B_i intersect B_j|^... reduced on the
    circle to overlap length over box size.  Same box gives 1, disjoint
    boxes give 0."""
    k = np.empty((2, 2))
    centers = (spec.center_1, spec.center_2)
    for i in range(2):
        for j in range(2):
            k[i, j] = (_arc_overlap(centers[i], centers[j], spec.box_size,
                                    spec.radius) / spec.box_size) ** spec.dimension
    return k
