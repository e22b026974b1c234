"""Certified Hamiltonian stability of Lagrangian torus orbits in CH^n.

The package decides, with an exact-arithmetic certificate, whether a
Lagrangian torus orbit in complex hyperbolic space is a stable critical
point of the volume functional under Hamiltonian deformations, exhibits
instability witnesses, computes rigidity null spaces and volumes, and
cross-validates the stability form against an independent spectral and
quadrature reconstruction of the second variation.
"""

from .orbit import (
    MetricMatrix,
    OrbitSpec,
    metric_euclidean,
    metric_hyperbolic,
    orbit_from_radii,
    orbit_from_simplex,
    orbit_from_tanh_sq,
    phi_forward,
    phi_inverse,
    volume_euclidean,
    volume_hyperbolic,
)
from .oracle import (
    OracleConstants,
    TrigMonomial,
    gradient_comparison_max_error,
    laplacian_comparison_check,
    laplacian_eigenvalue,
    second_variation_quadrature,
    second_variation_spectral,
    xi_derivative_eigenvalue,
)
from .stability import (
    StabilityCoefficients,
    StabilityReport,
    analyze,
    classify_mode,
    coefficients,
    enumerate_modes,
    instability_inequality,
    killing_null_basis,
    mode_bound,
    q_form,
    volume_minimizing_predicate,
)

__version__ = "0.1.0"
