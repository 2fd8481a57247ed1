"""Separability and negativity of effective two-mode Gaussian observables
of a massive thermal scalar field on a spatial circle, with an independent
harmonic-ring lattice oracle."""

from .errors import (
    AsymmetricStateError,
    CertificateError,
    ConvergenceError,
    DomainError,
    NonRealError,
    OverlapError,
    ResolutionError,
    SpectrumError,
    VetkitError,
)
from .greens_cylinder import (
    CovarianceComponents,
    CylinderPoint,
    GreensValue,
    components_closed_form,
    components_numeric,
    fold_separation,
    free_space_g0,
    hadamard_g,
    regularized_gr,
)
from .gaussian_two_mode import (
    OMEGA,
    PhysicalityReport,
    SeparabilityReport,
    TwoModeCovariance,
    negativity_standard,
    negativity_symmetric,
    physicality_check,
    pt_symplectic_squares,
    separability_report,
    simon_f,
    simon_f_closed,
    symplectic_spectrum_pt,
    two_mode_squeezed_covariance,
    vacuum_covariance,
)
from .collective_variance import (
    CollectiveSpec,
    build_v_tilde,
    collective_commutator_norm,
    collective_spec_on_cylinder,
)
from .separability_scan import (
    BoundCertificate,
    MaximumReport,
    ScanGrid,
    ScanRow,
    bound_certificate,
    f2,
    f4,
    f_expansion,
    maximize,
    scan_surface,
)
from .lattice_oracle import (
    LatticeContinuumReport,
    LatticeCovariance,
    LatticeSpec,
    collective_lattice_operators,
    compare_continuum,
    thermal_covariance,
)

__version__ = "0.1.0"
