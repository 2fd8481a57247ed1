"""The two-mode separability criterion on familiar states.

Exercises the Simon quantity F, the partial-transpose symplectic
spectrum, both negativities, and the physicality diagnostic on the
vacuum, thermal states, two-mode squeezed states, and the regularized
ring matrices (which are deliberately not physical states).
"""

import math

import numpy as np

from vetkit import (
    TwoModeCovariance,
    components_closed_form,
    negativity_standard,
    physicality_check,
    separability_report,
    simon_f,
    two_mode_squeezed_covariance,
    vacuum_covariance,
)
from vetkit.collective_variance import CollectiveSpec, build_v_tilde


def show(name, v, comp=None):
    rep = separability_report(v, comp)
    phys = "physical" if physicality_check(v).physical else "NOT physical"
    print(f"{name:<28} F = {rep.f_value:+12.6f}  nu- = {rep.nu_minus:9.5f}  "
          f"E_std = {rep.negativity_standard:8.4f}  {rep.verdict:<14} ({phys})")


def main():
    print("State" + " " * 24 + "Simon F        PT spectrum   negativity")
    print("-" * 100)
    show("vacuum", vacuum_covariance())
    for nu in (0.75, 1.5):
        show(f"thermal nu = {nu}", TwoModeCovariance(np.eye(4) * nu))
    for r in (0.25, 0.5, 1.0):
        show(f"two-mode squeezed r = {r}", two_mode_squeezed_covariance(r))

    print()
    print("Effective ring matrices (box size L = 0.01):")
    for dx, m in [(0.5, 0.0), (0.5, 1.0), (0.2, 0.5)]:
        comp = components_closed_form(dx, m)
        v = build_v_tilde(CollectiveSpec(0.01, 0.0, dx, comp))
        show(f"ring dx = {dx}, M = {m}", v, comp)

    print()
    print("The squeezed family has the textbook closed forms:")
    for r in (0.25, 0.5):
        f = simon_f(two_mode_squeezed_covariance(r))
        print(f"  r = {r}:  F = {f:.10f}   (cosh(4r) - 1)/2 = "
              f"{(math.cosh(4 * r) - 1) / 2:.10f}")
        e = negativity_standard(two_mode_squeezed_covariance(r))
        print(f"          E_std = {e:.10f}   exp(2r) - 1    = "
              f"{math.exp(2 * r) - 1:.10f}")


if __name__ == "__main__":
    main()
