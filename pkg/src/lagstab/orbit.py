"""Torus orbit parametrizations, induced metrics and volumes.

A Lagrangian torus orbit is carried in two coordinate systems at once:
Euclidean circle radii (r_1, ..., r_n) of the product torus in C^n, and the
pair (geodesic radius r, simplex point s) in the ball model of complex
hyperbolic space with holomorphic sectional curvature -4 (this normalization
is hard-coded throughout).  The two are linked by

    r_i = sinh(r) * sqrt(s_i),   sinh^2(r) = sum_i r_i^2,   sum_i s_i = 1.

All algebraic quantities (s_i, t = tanh^2 r, squared radii, metric entries)
propagate exactly through rational inputs; only transcendental ones (pi,
sinh, arcsinh) live on the float track.  An orbit may be specified by a
rational (t, s) pair directly so certification never touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NonPositiveEntry,
    NonPositiveGeodesicRadius,
    NonPositiveRadius,
    PointOutsideBall,
)
from .scalars import EXACT, FLOAT, SIMPLEX_TOL, all_exact, is_exact


@dataclass(frozen=True)
class OrbitSpec:
    """One Lagrangian torus orbit, immutable after construction.

    The canonical internal data is (n, simplex, tanh_sq): every algebraic
    quantity derives from it without leaving the rational field.  Radii are
    stored only when the orbit was built from them (then they are exact);
    otherwise they are recovered as float square roots.
    """

    n: int
    simplex: tuple
    tanh_sq: object  # Fraction or float, in (0, 1)
    track: str
    stored_radii: tuple | None = field(default=None, repr=False)

    @property
    def sinh_sq(self):
        """sinh^2(r) = t / (1 - t)."""
        t = self.tanh_sq
        return t / (1 - t)

    @property
    def cosh_sq(self):
        """cosh^2(r) = 1 / (1 - t) = 1 + sum r_i^2."""
        return 1 / (1 - self.tanh_sq) if self.track == EXACT else 1.0 / (1.0 - self.tanh_sq)

    @property
    def radii_sq(self) -> tuple:
        """Squared circle radii r_i^2 = sinh^2(r) * s_i; exact on the exact track."""
        if self.stored_radii is not None:
            return tuple(r * r for r in self.stored_radii)
        sh2 = self.sinh_sq
        return tuple(sh2 * s for s in self.simplex)

    @property
    def radii(self) -> tuple:
        if self.stored_radii is not None:
            return self.stored_radii
        return tuple(math.sqrt(q) for q in self.radii_sq)

    @property
    def geodesic_radius(self) -> float:
        """Geodesic radius r = arcsinh(sqrt(sum r_i^2)); always a float."""
        return math.asinh(math.sqrt(self.sinh_sq))

    @property
    def min_simplex(self):
        return min(self.simplex)


def _validate_simplex_sum(simplex):
    total = sum(simplex)
    if all_exact(simplex):
        if total != 1:
            from .errors import SimplexNotNormalized

            raise SimplexNotNormalized(f"simplex sums to {total}, expected exactly 1")
        return tuple(Fraction(s) for s in simplex)
    total = float(total)
    if abs(total - 1.0) > SIMPLEX_TOL:
        from .errors import SimplexNotNormalized

        raise SimplexNotNormalized(f"simplex sums to {total}, expected 1 within {SIMPLEX_TOL}")
    return tuple(float(s) / total for s in simplex)


def orbit_from_radii(n: int, radii) -> OrbitSpec:
    """Build the orbit through the torus T(r_1, ..., r_n) in C^n.

    Rational radii keep the whole orbit on the exact track, since
    sinh^2 r = sum r_i^2 and t = sinh^2 r / (1 + sinh^2 r) stay rational.
    """
    radii = tuple(radii)
    if n < 1:
        raise DimensionMismatch(f"n must be >= 1, got {n}")
    if len(radii) != n:
        raise DimensionMismatch(f"expected {n} radii, got {len(radii)}")
    if any(r <= 0 for r in radii):
        raise NonPositiveRadius(f"all radii must be positive, got {radii}")
    exact = all_exact(radii)
    if exact:
        radii = tuple(Fraction(r) for r in radii)
    else:
        radii = tuple(float(r) for r in radii)
    sinh_sq = sum(r * r for r in radii)
    simplex = tuple(r * r / sinh_sq for r in radii)
    tanh_sq = sinh_sq / (1 + sinh_sq)
    return OrbitSpec(
        n=n,
        simplex=simplex,
        tanh_sq=tanh_sq,
        track=EXACT if exact else FLOAT,
        stored_radii=radii,
    )


def orbit_from_simplex(n: int, geodesic_radius, simplex) -> OrbitSpec:
    """Build the orbit T_{r,s} from a geodesic radius and a simplex point.

    The geodesic radius enters through sinh^2 r, a transcendental function,
    so this constructor lands on the float track.  Use orbit_from_tanh_sq
    for exact-track orbits.
    """
    simplex = tuple(simplex)
    if n < 1:
        raise DimensionMismatch(f"n must be >= 1, got {n}")
    if len(simplex) != n:
        raise DimensionMismatch(f"expected {n} simplex entries, got {len(simplex)}")
    if geodesic_radius <= 0:
        raise NonPositiveGeodesicRadius(f"geodesic radius must be positive, got {geodesic_radius}")
    if any(s <= 0 for s in simplex):
        raise NonPositiveEntry(f"all simplex entries must be positive, got {simplex}")
    simplex = _validate_simplex_sum(simplex)
    th = math.tanh(float(geodesic_radius))
    return OrbitSpec(
        n=n,
        simplex=tuple(float(s) for s in simplex),
        tanh_sq=th * th,
        track=FLOAT,
    )


def orbit_from_tanh_sq(n: int, tanh_sq, simplex) -> OrbitSpec:
    """Build an orbit from t = tanh^2(r) and a simplex point.

    This is the certification entry point: rational (t, s) keeps every
    downstream algebraic quantity exact.
    """
    simplex = tuple(simplex)
    if n < 1:
        raise DimensionMismatch(f"n must be >= 1, got {n}")
    if len(simplex) != n:
        raise DimensionMismatch(f"expected {n} simplex entries, got {len(simplex)}")
    if not 0 < tanh_sq < 1:
        raise NonPositiveGeodesicRadius(f"tanh^2(r) must lie in (0, 1), got {tanh_sq}")
    if any(s <= 0 for s in simplex):
        raise NonPositiveEntry(f"all simplex entries must be positive, got {simplex}")
    simplex = _validate_simplex_sum(simplex)
    exact = all_exact(simplex) and is_exact(tanh_sq)
    if exact:
        return OrbitSpec(n=n, simplex=simplex, tanh_sq=Fraction(tanh_sq), track=EXACT)
    return OrbitSpec(
        n=n,
        simplex=tuple(float(s) for s in simplex),
        tanh_sq=float(tanh_sq),
        track=FLOAT,
    )


# ---------------------------------------------------------------------------
# The symplectomorphism between the ball model and C^n


def phi_forward(z) -> tuple:
    """Map a point of the open unit ball to C^n: z -> z / sqrt(1 - |z|^2)."""
    z = tuple(complex(c) for c in z)
    norm_sq = sum(abs(c) ** 2 for c in z)
    if norm_sq >= 1:
        raise PointOutsideBall(f"|z|^2 = {norm_sq} >= 1")
    scale = 1.0 / math.sqrt(1.0 - norm_sq)
    return tuple(scale * c for c in z)


def phi_inverse(w) -> tuple:
    """Inverse map C^n -> ball: w -> w / sqrt(1 + |w|^2)."""
    w = tuple(complex(c) for c in w)
    norm_sq = sum(abs(c) ** 2 for c in w)
    scale = 1.0 / math.sqrt(1.0 + norm_sq)
    return tuple(scale * c for c in w)


# ---------------------------------------------------------------------------
# Induced metrics in the angle coordinates


@dataclass(frozen=True)
class MetricMatrix:
    """Symmetric positive-definite metric components in angle coordinates."""

    entries: tuple  # tuple of row tuples

    @property
    def n(self) -> int:
        return len(self.entries)

    def det(self):
        """Determinant by fraction-free Gaussian elimination (Bareiss)."""
        a = [list(row) for row in self.entries]
        n = len(a)
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0 * prev
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    a[i][j] = num / prev if isinstance(num, (float, complex)) else _exact_div(num, prev)
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse_quadratic(self, vector):
        """Return v^T G^{-1} v, exact when entries and v are rational."""
        n = self.n
        if len(vector) != n:
            raise DimensionMismatch(f"vector length {len(vector)} != {n}")
        # Solve G x = v by Gaussian elimination with Fractions/floats.
        a = [[_lift(self.entries[i][j]) for j in range(n)] + [_lift(vector[i])] for i in range(n)]
        for k in range(n):
            pivot_row = max(range(k, n), key=lambda i: abs(a[i][k]))
            if a[pivot_row][k] == 0:
                raise ZeroDivisionError("singular metric matrix")
            a[k], a[pivot_row] = a[pivot_row], a[k]
            pivot = a[k][k]
            for i in range(n):
                if i == k:
                    continue
                factor = a[i][k] / pivot
                for j in range(k, n + 1):
                    a[i][j] -= factor * a[k][j]
        x = [a[i][n] / a[i][i] for i in range(n)]
        return sum(v * xi for v, xi in zip(vector, x))


def _lift(x):
    return Fraction(x) if is_exact(x) else x


def _exact_div(num, den):
    if is_exact(num) and is_exact(den):
        q = Fraction(num, den) if isinstance(num, int) and isinstance(den, int) else Fraction(num) / Fraction(den)
        return q.numerator if q.denominator == 1 else q
    return num / den


def metric_euclidean(orbit: OrbitSpec) -> MetricMatrix:
    """Flat metric of the product torus: diag(r_1^2, ..., r_n^2)."""
    rs = orbit.radii_sq
    n = orbit.n
    zero = 0 if orbit.track == EXACT else 0.0
    return MetricMatrix(tuple(tuple(rs[i] if i == j else zero for j in range(n)) for i in range(n)))


def metric_hyperbolic(orbit: OrbitSpec) -> MetricMatrix:
    """Induced hyperbolic metric G1[i][j] = r_i^2 delta_ij + r_i^2 r_j^2.

    The hyperbolic and flat norms differ by sinh^2(r) times the square of the
    Reeb 1-form; with xi_2 = (1/sinh r) sum_i d/dtheta_i one gets
    eta_2(d/dtheta_j) = r_j^2 / sinh(r), whence the rank-one correction
    (r_i^2 r_j^2) on top of the flat diagonal.
    """
    rs = orbit.radii_sq
    n = orbit.n
    return MetricMatrix(
        tuple(tuple(rs[i] * rs[j] + (rs[i] if i == j else 0) for j in range(n)) for i in range(n))
    )


# ---------------------------------------------------------------------------
# Volumes


def volume_euclidean(orbit: OrbitSpec) -> float:
    """Flat-torus volume (2 pi)^n prod r_i."""
    prod_sq = 1.0
    for q in orbit.radii_sq:
        prod_sq *= float(q)
    return (2.0 * math.pi) ** orbit.n * math.sqrt(prod_sq)


def volume_hyperbolic(orbit: OrbitSpec) -> float:
    """Hyperbolic volume (2 pi)^n (1 + sum r_i^2)^{1/2} prod r_i.

    Equals (2 pi)^n sqrt(det G1) and cosh(r) times the flat volume.
    """
    sum_sq = float(sum(orbit.radii_sq))
    return volume_euclidean(orbit) * math.sqrt(1.0 + sum_sq)
