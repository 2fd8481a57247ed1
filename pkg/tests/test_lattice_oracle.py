"""Harmonic-ring oracle: exact thermal correlators and continuum checks."""

import math

import numpy as np
import pytest

from vetkit import (
    DomainError,
    LatticeSpec,
    OverlapError,
    ResolutionError,
    collective_lattice_operators,
    compare_continuum,
    physicality_check,
    thermal_covariance,
)

PI = math.pi


def four_site_hand_sum():
    """Hand-expandable four-mode sum for N=4, m=1, spacing 1/4, T=0."""
    eps = 0.25
    omegas = [math.sqrt(1.0 + (4.0 / eps ** 2) * math.sin(PI * k / 4) ** 2)
              for k in range(4)]
    return sum(1.0 / (2.0 * w) for w in omegas) / (4 * eps)


class TestThermalCovariance:
    def test_four_site_zero_temperature_value(self):
        spec = LatticeSpec(sites=4, mass=1.0, zero_temperature=True)
        cov = thermal_covariance(spec)
        # mode frequencies are {1, sqrt(33), sqrt(65), sqrt(33)}
        assert cov.phi_phi(0) == pytest.approx(four_site_hand_sum(), rel=1e-14)
        assert cov.phi_phi(0) == pytest.approx(0.7360950232503021, rel=1e-13)

    def test_mode_completeness_reconstructs_delta(self):
        # equal mode weights resum to delta_s0 / eps
        spec = LatticeSpec(sites=16, mass=1.0, zero_temperature=True)
        n, eps = spec.sites, spec.spacing
        k = np.arange(n)
        for s in (0, 1, 5, 8):
            total = np.sum(np.cos(2 * PI * k * s / n)) / (n * eps)
            expect = (1.0 / eps) if s == 0 else 0.0
            assert total == pytest.approx(expect, abs=1e-10)

    def test_high_temperature_leading_order(self):
        beta = 1e-6
        spec = LatticeSpec(sites=8, mass=1.0, inverse_temperature=beta)
        cov = thermal_covariance(spec)
        n, eps = spec.sites, spec.spacing
        k = np.arange(n)
        omega = np.sqrt(1.0 + (4.0 / eps ** 2) * np.sin(PI * k / n) ** 2)
        classical = float(np.sum(1.0 / (beta * omega ** 2)) / (n * eps))
        assert cov.phi_phi(0) == pytest.approx(classical, rel=1e-4)

    def test_separation_reflection_symmetry(self):
        spec = LatticeSpec(sites=16, mass=0.5, inverse_temperature=2.0)
        cov = thermal_covariance(spec)
        for s in range(1, 8):
            assert cov.phi_phi(s) == pytest.approx(cov.phi_phi(16 - s), rel=1e-13)
            assert cov.pi_pi(s) == pytest.approx(cov.pi_pi(16 - s), rel=1e-13)

    def test_zero_temperature_flag_equals_large_beta(self):
        frozen = thermal_covariance(LatticeSpec(4, 1.0, zero_temperature=True))
        cold = thermal_covariance(LatticeSpec(4, 1.0, inverse_temperature=1e4))
        assert frozen.phi_phi(1) == pytest.approx(cold.phi_phi(1), rel=1e-12)
        assert frozen.pi_pi(1) == pytest.approx(cold.pi_pi(1), rel=1e-12)

    def test_momentum_variance_grows_with_temperature(self):
        values = []
        for beta in (4.0, 2.0, 1.0, 0.5):
            cov = thermal_covariance(LatticeSpec(32, 1.0, inverse_temperature=beta))
            values.append(cov.pi_pi(0))
        assert values == sorted(values)

    def test_invalid_specs_rejected(self):
        with pytest.raises(DomainError):
            LatticeSpec(sites=5, mass=1.0, zero_temperature=True)
        with pytest.raises(DomainError):
            LatticeSpec(sites=2, mass=1.0, zero_temperature=True)
        with pytest.raises(DomainError):
            LatticeSpec(sites=8, mass=0.0, zero_temperature=True)
        with pytest.raises(DomainError):
            LatticeSpec(sites=8, mass=1.0)


@pytest.fixture(scope="module")
def cov():
    return thermal_covariance(
        LatticeSpec(sites=256, mass=0.05, inverse_temperature=200.0))


class TestCollectiveOperators:

    def test_commutator_coefficient_unity(self, cov):
        n = cov.spec.sites
        for box in (1, 4, 8, 16):
            result = collective_lattice_operators(cov, box, (n // 4, 3 * n // 4))
            assert abs(result.commutator_coefficient - 1.0) < 1e-10

    def test_single_site_box_reproduces_site_correlators(self, cov):
        n, eps = cov.spec.sites, cov.spec.spacing
        result = collective_lattice_operators(cov, 1, (0, n // 2))
        v = result.covariance.entries
        assert v[0, 0] == pytest.approx(cov.phi_phi(0), rel=1e-13)
        assert v[1, 1] == pytest.approx(eps ** 2 * cov.pi_pi(0), rel=1e-13)
        assert v[0, 2] == pytest.approx(cov.phi_phi(n // 2), rel=1e-13)

    def test_lattice_state_is_physical(self, cov):
        n = cov.spec.sites
        for box in (1, 8):
            result = collective_lattice_operators(cov, box, (n // 4, 3 * n // 4))
            rep = physicality_check(result.covariance)
            assert rep.min_eigenvalue >= -1e-10

    def test_field_entry_tracks_continuum_differences(self, cov):
        # differences of the collective field correlator across two
        # separations follow the correlator differences (G1 - G2)/2; the
        # separation-independent uniform-mode constant drops out
        from vetkit import CylinderPoint, hadamard_g
        n = cov.spec.sites
        box = 8
        r1 = collective_lattice_operators(cov, box, (0, int(0.3 * n)))
        r2 = collective_lattice_operators(cov, box, (0, int(0.4 * n)))
        lat_diff = r1.covariance.entries[0, 2] - r2.covariance.entries[0, 2]
        g1 = hadamard_g(CylinderPoint(0.3, 0.0, 0.0)).value
        g2 = hadamard_g(CylinderPoint(0.4, 0.0, 0.0)).value
        assert lat_diff == pytest.approx((g1 - g2) / 2.0, rel=0.05)

    def test_overlapping_boxes_rejected(self, cov):
        with pytest.raises(OverlapError):
            collective_lattice_operators(cov, 8, (0, 4))


class TestContinuumComparison:
    def test_near_vacuum_agreement(self):
        spec = LatticeSpec(sites=256, mass=0.05, inverse_temperature=200.0)
        report = compare_continuum(spec, (0.2, 0.4))
        row = report.phi_comparisons[0]
        assert row.rel_discrepancy_vacuum < 0.01
        assert row.rel_discrepancy_vacuum_refined < row.rel_discrepancy_vacuum
        assert row.convergence_ratio < 1.0

    def test_thermal_regime_reported_not_asserted(self):
        spec = LatticeSpec(sites=128, mass=1.0, inverse_temperature=1.0)
        report = compare_continuum(spec, (0.25, 0.5))
        row = report.phi_comparisons[0]
        assert math.isfinite(row.lattice_diff)
        assert row.rel_discrepancy_thermal > 0.0  # recorded, no assertion

    def test_momentum_sector_reported(self):
        spec = LatticeSpec(sites=256, mass=0.05, inverse_temperature=200.0)
        report = compare_continuum(spec, (0.25, 0.5))
        for row in report.pi_comparisons:
            assert row.lattice_pi_pi < 0.0
            assert row.rel_discrepancy_vacuum < 0.05

    def test_off_lattice_separation_rejected_in_strict_mode(self):
        spec = LatticeSpec(sites=128, mass=1.0, inverse_temperature=1.0)
        with pytest.raises(ResolutionError):
            compare_continuum(spec, (0.2501, 0.5), snap=False)

    def test_sub_resolution_separation_rejected(self):
        spec = LatticeSpec(sites=128, mass=1.0, inverse_temperature=1.0)
        with pytest.raises(ResolutionError):
            compare_continuum(spec, (1e-4, 0.5))

    def test_single_separation_rejected(self):
        spec = LatticeSpec(sites=128, mass=1.0, inverse_temperature=1.0)
        with pytest.raises(DomainError):
            compare_continuum(spec, (0.25,))

    def test_report_serializes(self):
        spec = LatticeSpec(sites=64, mass=1.0, inverse_temperature=1.0)
        payload = compare_continuum(spec, (0.25, 0.5)).to_dict()
        assert payload["sites"] == 64
        assert len(payload["phi_comparisons"]) == 1
