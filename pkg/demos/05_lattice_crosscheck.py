"""Cross-checking the continuum against an exact harmonic ring.

A finite chain of coupled oscillators on a ring has exact thermal
correlators from its normal modes.  In the near-vacuum, nearly massless
regime its correlator differences must reproduce the continuum ring
correlator; the collective box operators built on the lattice must be
canonical and define a genuinely physical state (unlike the regularized
continuum matrices).
"""

from vetkit import (
    LatticeSpec,
    collective_lattice_operators,
    compare_continuum,
    physicality_check,
    thermal_covariance,
)


def main():
    spec = LatticeSpec(sites=1024, mass=0.05, inverse_temperature=200.0)
    print(f"ring: {spec.sites} sites, mass {spec.mass}, beta "
          f"{spec.inverse_temperature} (M = {spec.mass * spec.inverse_temperature})")
    print()

    report = compare_continuum(spec, (0.2, 0.4))
    for row in report.phi_comparisons:
        d1, d2 = row.delta_x_pair
        print(f"phi-phi difference across dx = {d1:.4f} vs {d2:.4f}:")
        print(f"  lattice (N)             = {row.lattice_diff:.9f}")
        print(f"  lattice (2N)            = {row.lattice_diff_refined:.9f}")
        print(f"  continuum, M -> 0 limit = {row.continuum_diff_vacuum_limit:.9f}")
        print(f"  relative discrepancy    = {row.rel_discrepancy_vacuum:.3e} (N)"
              f"  -> {row.rel_discrepancy_vacuum_refined:.3e} (2N)")
        print(f"  thermal-shift reading   = {row.continuum_diff_thermal_shift:.9f}"
              f"  (discrepancy {row.rel_discrepancy_thermal:.3g}, reported only)")
    print()

    for row in report.pi_comparisons:
        print(f"pi-pi at dx = {row.delta_x:.4f}: "
              f"lattice {row.lattice_pi_pi:.6f}"
              f"  continuum {row.continuum_pi_pi_vacuum_limit:.6f}"
              f"  (rel {row.rel_discrepancy_vacuum:.2e})")
    print()

    cov = thermal_covariance(spec)
    n = spec.sites
    print("collective boxes on the lattice (centers at N/4 and 3N/4):")
    print(f"{'sites':>6} {'box size':>10} {'[Phi,Pi] coeff':>15} "
          f"{'min eig of V + i Omega/2':>26}")
    for box in (1, 4, 8, 16):
        result = collective_lattice_operators(cov, box, (n // 4, 3 * n // 4))
        phys = physicality_check(result.covariance)
        print(f"{box:>6} {result.box_size:>10.6f} "
              f"{result.commutator_coefficient:>15.12f} "
              f"{phys.min_eigenvalue:>26.6e}")
    print()
    print("the lattice state is physical (eigenvalues >= 0) at every box")
    print("size, while the regularized continuum matrices are not; the")
    print("separability verdict lives entirely in the F quantity.")


if __name__ == "__main__":
    main()
