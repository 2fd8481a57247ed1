"""Locating the expansion maxima and certifying the global bound.

The box-size expansion F = -1/4 + L^2 f2 + L^4 f4 is bounded by replacing
each coefficient with its maximum over (dx, M).  This demo runs the
deterministic grid-refinement maximizer for both coefficients, shows the
refinement history converging, and certifies pointwise that the bound
holds and stays negative for box sizes up to one half.
"""

from vetkit import bound_certificate, maximize


def main():
    for target in ("f2", "f4"):
        rep = maximize(target)
        print(f"maximize({target}):")
        print(f"  value    = {rep.value:.9f}")
        print(f"  location = (dx = {rep.location[0]:.6f}, M = {rep.location[1]:.6f})")
        print(f"  final-round agreement = {rep.tolerance:.2e}")
        print("  refinement history (grid step -> best value):")
        for step, value in rep.refinement_history:
            print(f"    {step:12.3e} -> {value:.12f}")
        print()

    cert = bound_certificate((0.01, 0.1, 0.25, 0.49))
    print("bound certificate with computed maxima "
          f"(max f2 = {cert.max_f2:.6f}, max f4 = {cert.max_f4:.6f}):")
    print(f"{'L':>6} {'bound':>14} {'3-digit ref bound':>18} {'worst margin':>14}")
    for row in cert.rows:
        print(f"{row.box_size:6.2f} {row.bound:14.8f} "
              f"{row.reference_bound:18.8f} {row.worst_margin:14.3e}")
    print(f"\nworst margin over all L and grid points: {cert.worst_margin:.3e}")
    print("negative margins everywhere: the effective two-mode state is")
    print("on the positive-partial-transpose side for every tested point.")


if __name__ == "__main__":
    main()
