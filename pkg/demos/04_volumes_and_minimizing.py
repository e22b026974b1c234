"""Orbit volumes and the volume-minimizing classification.

The hyperbolic volume of an orbit exceeds the flat volume of its torus by
exactly cosh(r).  Even a stable orbit can fail to minimize volume in its
Hamiltonian isotopy class: three distinct circle radii, or an explicit
unstable witness, each rule minimization out.
"""

import math
from fractions import Fraction

from lagstab import (
    analyze,
    orbit_from_radii,
    orbit_from_tanh_sq,
    volume_euclidean,
    volume_hyperbolic,
)

orbit = orbit_from_radii(2, (1, 1))
print("unit-radii torus in dimension 2:")
print(f"  flat volume:       {volume_euclidean(orbit):.10f}  (= 4 pi^2)")
print(f"  hyperbolic volume: {volume_hyperbolic(orbit):.10f}  (= 4 pi^2 sqrt 3)")
print(f"  ratio:             {volume_hyperbolic(orbit) / volume_euclidean(orbit):.10f}"
      f"  (= cosh r = {math.sqrt(float(orbit.cosh_sq)):.10f})")

print("\nvolume-minimizing classification:")
for label, orbit in [
    ("radii (1, 2, 3)", orbit_from_radii(3, (1, 2, 3))),
    (
        "stretched orbit",
        orbit_from_tanh_sq(
            3, Fraction(1, 2), [Fraction(1, 100), Fraction(99, 200), Fraction(99, 200)]
        ),
    ),
    ("Clifford n = 3", orbit_from_tanh_sq(3, Fraction(1, 2), [Fraction(1, 3)] * 3)),
]:
    report = analyze(orbit)
    print(f"  {label}: {report.verdict}, volume_minimizing = {report.volume_minimizing}")
