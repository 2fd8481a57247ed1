"""Anatomy of the ring correlator and its regularization.

Walks through the three correlator layers at a few sample points: the
thermal correlator on the circle, its flat-space limit, and the finite
regularized difference, then shows the closed-form covariance components
agreeing with their independent finite-difference evaluation.
"""

from vetkit import (
    CylinderPoint,
    components_closed_form,
    components_numeric,
    free_space_g0,
    hadamard_g,
    regularized_gr,
)


def main():
    print("=" * 72)
    print("Correlator layers at sample (dx, M) points, equal times, R = 1")
    print("=" * 72)
    print(f"{'dx':>6} {'M':>5} {'G (ring)':>14} {'G0 (flat)':>14} {'G - G0':>14}")
    for dx, m in [(0.5, 0.0), (0.25, 0.0), (0.25, 1.0), (0.1, 2.0)]:
        p = CylinderPoint(dx, 0.0, m)
        g = hadamard_g(p).value
        g0 = free_space_g0(p).value
        gr = regularized_gr(p).value
        print(f"{dx:6.2f} {m:5.1f} {g:14.8f} {g0:14.8f} {gr:14.8f}")

    print()
    print("The difference stays finite all the way to coincidence:")
    for dx in (1e-1, 1e-3, 1e-6, 0.0):
        gr = regularized_gr(CylinderPoint(dx, 0.0, 1.0)).value
        print(f"  dx = {dx:<8g} ->  G - G0 = {gr:.10f}")

    print()
    print("=" * 72)
    print("Covariance components: closed form vs finite-difference limits")
    print("=" * 72)
    print(f"{'dx':>6} {'M':>5} {'component':>10} {'closed':>16} "
          f"{'numeric':>16} {'rel dev':>10}")
    for dx, m in [(0.5, 0.0), (0.3, 0.0), (0.25, 1.0)]:
        closed = components_closed_form(dx, m)
        numeric = components_numeric(dx, m)
        for name in ("a", "b", "c", "d"):
            x, y = getattr(closed, name), getattr(numeric, name)
            rel = abs(x - y) / max(1e-300, abs(x)) if x != 0 else abs(y)
            print(f"{dx:6.2f} {m:5.1f} {name:>10} {x:16.10f} {y:16.10f} "
                  f"{rel:10.2e}")
    print()
    print("Note the momentum kernel d: at M = 0 both paths agree; at M > 0")
    print("the closed form is mass-independent while the derivative path is")
    print("not, and the toolkit reports that gap instead of hiding it.")

    print()
    print("Circle symmetry: separations are reduced to the nearest image,")
    print("so dx and 1 - dx label the same pair of points:")
    c1 = components_closed_form(0.2, 0.5).c
    c2 = components_closed_form(0.8, 0.5).c
    print(f"  c(0.2) = {c1:.12f}")
    print(f"  c(0.8) = {c2:.12f}")


if __name__ == "__main__":
    main()
