"""Box-size expansion coefficients, maximization, bound, surface scan."""

import math

import numpy as np
import pytest

from vetkit import (
    CertificateError,
    DomainError,
    ScanGrid,
    bound_certificate,
    components_closed_form,
    f2,
    f4,
    f_expansion,
    maximize,
    scan_surface,
    simon_f_closed,
)

PI = math.pi


class TestCoefficients:
    def test_f2_maximum_value(self):
        assert f2(0.5, 0.0) == pytest.approx(0.134, abs=5e-4)
        assert f2(0.5, 0.0) == pytest.approx(0.1342815642200543, rel=1e-12)

    def test_f4_reported_maximum(self):
        assert f4(0.5, 1.107) == pytest.approx(0.0164, abs=1e-4)
        assert f4(0.5, 1.107) == pytest.approx(0.016450886610605838, rel=1e-10)

    def test_f2_matches_component_combination(self):
        # f2 is exactly a*b + a'*b' - 2*c*d of the closed-form components
        for dx in (0.15, 0.3, 0.5):
            for m in (0.0, 0.4, 1.0, 2.5):
                comp = components_closed_form(dx, m)
                combo = (comp.a * comp.b + comp.a_prime * comp.b_prime
                         - 2.0 * comp.c * comp.d)
                assert f2(dx, m) == pytest.approx(combo, rel=1e-10, abs=1e-14)

    def test_f4_matches_component_combination(self):
        for dx in (0.15, 0.3, 0.5):
            for m in (0.0, 0.4, 1.0, 2.5):
                comp = components_closed_form(dx, m)
                a, b, c, d = comp.a, comp.b, comp.c, comp.d
                combo = -4.0 * (a * a * b * b - a * a * d * d
                                - c * c * b * b + c * c * d * d)
                assert f4(dx, m) == pytest.approx(combo, rel=1e-10, abs=1e-14)

    def test_reflection_symmetry(self):
        for dx in (0.2, 0.3, 0.4):
            for m in (0.0, 1.0):
                assert f2(dx, m) == pytest.approx(f2(1.0 - dx, m), rel=1e-12)
                assert f4(dx, m) == pytest.approx(f4(1.0 - dx, m), rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            f2(0.0, 1.0)
        with pytest.raises(DomainError):
            f2(1.0, 1.0)
        with pytest.raises(DomainError):
            f4(0.3, -0.1)

    def test_edge_behavior_is_finite(self):
        assert abs(f2(1e-4, 0.0)) < 1e-6
        assert abs(f2(1.0 - 1e-4, 0.0)) < 1e-6
        assert abs(f4(1e-4, 3.0)) < 1e-6


class TestExpansion:
    def test_zero_box_size(self):
        assert f_expansion(0.3, 1.0, 0.0) == -0.25

    def test_headline_point(self):
        assert f_expansion(0.5, 0.0, 0.01) == pytest.approx(-0.2499866, abs=1e-7)

    def test_exact_regrouping_of_closed_form(self):
        # the expansion is an exact regrouping of the scalar expression
        for dx in np.linspace(0.05, 0.95, 20):
            for m in np.linspace(0.0, 3.0, 20):
                comp = components_closed_form(float(dx), float(m))
                for l in (1e-3, 1e-2, 1e-1):
                    fe = f_expansion(float(dx), float(m), l)
                    fc = simon_f_closed(comp, l, 1)
                    assert abs(fe - fc) <= 1e-12 * max(1.0, abs(fc))

    def test_negative_across_sample_grid(self):
        for dx in np.linspace(0.05, 0.95, 12):
            for m in np.linspace(0.0, 3.0, 12):
                assert f_expansion(float(dx), float(m), 0.01) < 0.0


class TestMaximize:
    def test_f2_maximum(self):
        rep = maximize("f2")
        assert rep.value == pytest.approx(0.134, abs=5e-3)
        assert rep.location[0] == pytest.approx(0.5, abs=5e-3)
        assert rep.location[1] <= 0.02

    def test_f4_maximum(self):
        rep = maximize("f4")
        assert rep.value == pytest.approx(0.0164, abs=5e-4)
        assert rep.location[0] == pytest.approx(0.5, abs=5e-3)
        assert rep.location[1] == pytest.approx(1.107, abs=0.02)

    def test_history_monotone_nondecreasing(self):
        rep = maximize("f4", refinements=5)
        values = [v for _, v in rep.refinement_history]
        assert values == sorted(values)
        assert rep.tolerance == abs(values[-1] - values[-2])

    def test_coarse_value_below_refined(self):
        coarse = maximize("f2", refinements=0)
        refined = maximize("f2", refinements=6)
        assert coarse.value <= refined.value

    def test_constant_target_flat_history(self):
        rep = maximize(lambda dx, m: 0.0, refinements=3)
        assert rep.value == 0.0
        assert all(v == 0.0 for _, v in rep.refinement_history)
        assert rep.plateaued

    def test_unknown_target_rejected(self):
        with pytest.raises(DomainError):
            maximize("f6")


class TestCertificate:
    def test_certifies_reference_box_sizes(self):
        cert = bound_certificate(
            (0.01, 0.1, 0.25, 0.49),
            grid=ScanGrid(delta_x_count=25, m_count=15),
            maxima=(0.1342815642200543, 0.016450886613988296))
        assert cert.worst_margin < 0.0
        for row in cert.rows:
            assert row.bound < 0.0
            assert row.reference_bound < 0.0

    def test_largest_allowed_box(self):
        cert = bound_certificate(
            (0.49,), grid=ScanGrid(delta_x_count=15, m_count=9),
            maxima=(0.1342815642200543, 0.016450886613988296))
        assert cert.rows[0].reference_bound == pytest.approx(
            -0.25 + 0.134 * 0.49 ** 2 + 0.0164 * 0.49 ** 4, rel=1e-12)
        assert cert.rows[0].reference_bound == pytest.approx(-0.2169, abs=1e-3)

    def test_out_of_range_box_rejected(self):
        with pytest.raises(DomainError):
            bound_certificate((0.6,))
        with pytest.raises(DomainError):
            bound_certificate((0.5,))

    def test_violation_raises_with_points(self):
        with pytest.raises(CertificateError) as err:
            bound_certificate((0.1,),
                              grid=ScanGrid(delta_x_count=9, m_count=5),
                              maxima=(0.0, 0.0))
        assert len(err.value.violations) > 0
        dx, m, l, fv, bound = err.value.violations[0]
        assert fv > bound


class TestScanSurface:
    def test_small_grid_shape_and_order(self):
        grid = ScanGrid(delta_x_range=(0.2, 0.4), delta_x_count=3,
                        m_range=(0.0, 1.0), m_count=3, l_values=(0.01,))
        rows = scan_surface(grid)
        assert len(rows) == 9
        assert [r.dx for r in rows[:3]] == [0.2, 0.2, 0.2]
        assert [r.m for r in rows[:3]] == [0.0, 0.5, 1.0]
        assert all(r.f < 0.0 for r in rows)

    def test_symmetric_grid_values(self):
        grid = ScanGrid(delta_x_range=(0.25, 0.75), delta_x_count=2,
                        m_range=(0.5, 1.0), m_count=2, l_values=(0.01,))
        rows = scan_surface(grid)
        assert len(rows) == 4
        assert rows[0].f == pytest.approx(rows[2].f, rel=1e-12)
        assert rows[1].f == pytest.approx(rows[3].f, rel=1e-12)

    def test_single_point_grid(self):
        grid = ScanGrid(delta_x_range=(0.5, 0.5), delta_x_count=1,
                        m_range=(0.0, 0.0), m_count=1, l_values=(0.01,))
        rows = scan_surface(grid)
        assert len(rows) == 1
        assert rows[0].f == pytest.approx(-0.2499866, abs=1e-7)

    def test_threaded_matches_serial(self):
        grid = ScanGrid(delta_x_range=(0.1, 0.9), delta_x_count=7,
                        m_range=(0.0, 2.0), m_count=5, l_values=(0.01, 0.1))
        assert scan_surface(grid, threads=4) == scan_surface(grid, threads=1)

    def test_quartic_coefficient_peaks_at_its_maximum_row(self):
        grid = ScanGrid(delta_x_range=(0.3, 0.5), delta_x_count=3,
                        m_range=(0.907, 1.307), m_count=5, l_values=(0.01,))
        rows = scan_surface(grid)
        top = max(rows, key=lambda r: r.f4)
        assert top.dx == 0.5
        assert top.m == pytest.approx(1.107, abs=1e-12)

    def test_multiple_box_sizes_outermost(self):
        grid = ScanGrid(delta_x_range=(0.3, 0.4), delta_x_count=2,
                        m_range=(0.0, 1.0), m_count=2, l_values=(0.01, 0.1))
        rows = scan_surface(grid)
        assert [r.l for r in rows] == [0.01] * 4 + [0.1] * 4

    def test_invalid_grids_rejected(self):
        with pytest.raises(DomainError):
            ScanGrid(delta_x_range=(0.0, 0.9))
        with pytest.raises(DomainError):
            ScanGrid(m_range=(-1.0, 2.0))
        with pytest.raises(DomainError):
            ScanGrid(l_values=(0.6,))
        with pytest.raises(DomainError):
            ScanGrid(delta_x_range=(0.4, 0.2), delta_x_count=5)
