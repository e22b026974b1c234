"""Three independent routes to the same second-variation eigenvalue.

The closed-form quadratic form is cross-checked against (a) a spectral
assembly of the second-variation integrand through derivative eigenvalues,
exact on the rational track, and (b) a trapezoid quadrature of the raw
integrand on an angle grid.  Agreement of all three is what lets the
certified verdicts be trusted.
"""

from fractions import Fraction

from lagstab import (
    TrigMonomial,
    orbit_from_tanh_sq,
    q_form,
    second_variation_quadrature,
    second_variation_spectral,
)

orbit = orbit_from_tanh_sq(
    3, Fraction(1, 2), [Fraction(1, 100), Fraction(99, 200), Fraction(99, 200)]
)
sinh4 = orbit.sinh_sq**2

for mode in [(-1, 1, 1), (1, 0, 0), (2, -1, 0), (1, 1, 1)]:
    u = TrigMonomial(mode)
    closed = q_form(orbit, mode)
    spectral = sinh4 * second_variation_spectral(orbit, u)
    quad = float(sinh4) * second_variation_quadrature(orbit, u)
    print(f"mode {mode}:")
    print(f"  closed form: {closed}")
    print(f"  spectral:    {spectral}  (exact match: {closed == spectral})")
    print(f"  quadrature:  {quad:.12f}  (|dev| = {abs(quad - float(closed)):.2e})")
