"""Independent reconstruction of the second variation, for cross-validation.

Two routes to the same number, neither of which touches the closed-form
quadratic form in stability.py:

* spectral assembly -- the three integrand blocks of the second variation
  are applied to a trigonometric monomial through the eigenvalue actions of
  the angle derivatives, yielding the coefficient of the integral of u^2
  analytically (exact rationals on the exact track);

* grid quadrature -- the second-variation integrand is evaluated pointwise
  on a uniform angle grid and integrated by the trapezoid rule, which is
  exact for trigonometric polynomials below the Nyquist limit.

Both return the second variation divided by the integral of u^2 dv, i.e.
Q / sinh^4(r).  The module also checks the metric/gradient/Laplacian
comparison identities between the hyperbolic and flat pictures.

Sign conventions: the Laplacian has positive spectrum (Delta u = lambda u),
and the Reeb field is normalized so its complex rotation is the inner unit
normal of the ambient sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, GridTooCoarse, InvalidOrder
from .orbit import OrbitSpec, metric_hyperbolic
from .scalars import EXACT
from .stability import check_mode

COS = "cos"
SIN = "sin"


@dataclass(frozen=True)
class TrigMonomial:
    """u = cos(sum m_i theta_i) or sin(sum m_i theta_i) on the flat torus."""

    mode: tuple
    phase: str = COS

    def __post_init__(self):
        if self.phase not in (COS, SIN):
            raise DimensionMismatch(f"phase must be 'cos' or 'sin', got {self.phase!r}")
        if not any(self.mode):
            raise DimensionMismatch("mode must be nonzero")
        object.__setattr__(self, "mode", tuple(int(m) for m in self.mode))


@dataclass(frozen=True)
class OracleConstants:
    """The four radius-dependent coefficients of the reduced integrand."""

    c1: float  # 2 tanh^2 r
    c2: float  # 2 tanh r / cosh r
    c3: float  # tanh^4 r
    c4: float  # tanh^2 r / cosh^2 r

    @classmethod
    def from_orbit(cls, orbit: OrbitSpec) -> "OracleConstants":
        t = float(orbit.tanh_sq)
        tanh = math.sqrt(t)
        cosh = 1.0 / math.sqrt(1.0 - t)
        return cls(c1=2.0 * t, c2=2.0 * tanh / cosh, c3=t * t, c4=t * (1.0 - t))


def _inv_sinh_sq(orbit: OrbitSpec):
    t = orbit.tanh_sq
    return (1 - t) / t


def laplacian_eigenvalue(orbit: OrbitSpec, u: TrigMonomial):
    """Flat Hodge Laplacian eigenvalue sum m_i^2 / r_i^2 (Delta u = lambda u)."""
    mode = check_mode(u.mode, orbit.n)
    inv_sh2 = _inv_sinh_sq(orbit)
    return sum(m * m * inv_sh2 / s for m, s in zip(mode, orbit.simplex))


def xi_derivative_eigenvalue(orbit: OrbitSpec, u: TrigMonomial, order: int):
    """Scalar action of the Reeb derivative on a trigonometric monomial.

    Order 1 returns D / sinh(r) (the phase flips cos <-> sin with the sign
    carried here for a cos input); order 2 returns -D^2 / sinh^2(r) with the
    phase unchanged.  Only the order-2 factor is rational, so order 1 lives
    on the float track.
    """
    mode = check_mode(u.mode, orbit.n)
    D = sum(mode)
    if order == 2:
        return -D * D * _inv_sinh_sq(orbit)
    if order == 1:
        sign = -1 if u.phase == COS else 1
        return sign * D / math.sqrt(float(orbit.sinh_sq))
    raise InvalidOrder(f"order must be 1 or 2, got {order}")


def second_variation_spectral(orbit: OrbitSpec, u: TrigMonomial):
    """Analytic assembly of the second variation over one Fourier monomial.

    The three integrand blocks are reduced by the eigenvalue actions of the
    angle derivatives (every fourth- and second-order action multiplies the
    monomial by a rational scalar), and cos/sin monomials of the same mode
    give the same value since only squared amplitudes survive integration.
    Returns the second variation divided by the integral of u^2 dv.
    """
    mode = check_mode(u.mode, orbit.n)
    s = orbit.simplex
    t = orbit.tanh_sq
    inv_sh2 = _inv_sinh_sq(orbit)
    inv_ch2 = 1 - t

    # Block (I): flat-space second variation, the quartic operator
    # sum_i (d_i^4 + d_i^2)/r_i^4 + sum_{i != j} (d_i^2 d_j^2 - d_i d_j)/(r_i^2 r_j^2).
    term1 = 0
    for i, (mi, si) in enumerate(zip(mode, s)):
        term1 += (mi ** 4 - mi ** 2) * inv_sh2 * inv_sh2 / (si * si)
        for j, (mj, sj) in enumerate(zip(mode, s)):
            if j != i:
                term1 += (mi * mi * mj * mj + mi * mj) * inv_sh2 * inv_sh2 / (si * sj)

    D = sum(mode)
    lam = laplacian_eigenvalue(orbit, u)
    xi2 = -D * D * inv_sh2  # order-2 Reeb action
    C = sum(m / si for m, si in zip(mode, s))

    # Block (II): c1 * xi xi(u) * Delta u - c2 * xi(u) * J H(u); the second
    # product pairs two odd derivatives, so its rational value is assembled
    # from the paired amplitudes directly.
    term2 = 2 * t * xi2 * lam + 2 * inv_ch2 * inv_sh2 * D * C

    # Block (III): c3 |xi xi(u)|^2 - c4 |xi(u)|^2, with |xi(u)|^2 -> D^2/sinh^2.
    term3 = t * t * xi2 * xi2 - t * inv_ch2 * D * D * inv_sh2

    return term1 + term2 + term3


def default_grid(u: TrigMonomial) -> int:
    return 4 * (max(abs(m) for m in u.mode) + 1)


def _angle_grid(mode, grid):
    """Phase array psi = sum m_i theta_i over the product grid, flattened."""
    theta = 2.0 * np.pi * np.arange(grid) / grid
    psi = np.zeros(1)
    for m in mode:
        psi = (psi[..., None] + m * theta).reshape(-1)
    return psi


def second_variation_quadrature(orbit: OrbitSpec, u: TrigMonomial, grid: int | None = None):
    """Trapezoid-rule evaluation of the second-variation integrand.

    Every derivative of the monomial is evaluated pointwise on a uniform
    angle grid and the integrand of the stability criterion is summed by
    the trapezoid rule, spectrally exact for trigonometric polynomials on
    at least 4 (max |m_i| + 1) points per angle.  Returns the integral
    divided by the integral of u^2 dv, comparable to the spectral value.
    """
    mode = check_mode(u.mode, orbit.n)
    nyquist = default_grid(u)
    if grid is None:
        grid = nyquist
    if grid < nyquist:
        raise GridTooCoarse(f"grid {grid} below Nyquist margin {nyquist}")

    t = float(orbit.tanh_sq)
    sinh = math.sqrt(t / (1.0 - t))
    consts = OracleConstants.from_orbit(orbit)
    inv_r2 = np.array([1.0 / float(q) for q in orbit.radii_sq])

    psi = _angle_grid(mode, grid)
    if u.phase == COS:
        u_arr = np.cos(psi)
        dphase = -np.sin(psi)  # d_i u = m_i * dphase
    else:
        u_arr = np.sin(psi)
        dphase = np.cos(psi)
    marr = np.array(mode, dtype=float)
    du = marr[:, None] * dphase[None, :]  # first derivatives d_i u
    ddu_diag = -(marr ** 2)[:, None] * u_arr[None, :]  # d_i^2 u

    lap = -np.einsum("i,ij->j", inv_r2, ddu_diag)  # Hodge Delta_2 u
    jh = -np.einsum("i,ij->j", inv_r2, du)  # J_2 H_2 (u)
    bterm = np.einsum("i,ij->j", inv_r2 ** 2, du ** 2)  # g2(B2(grad u, grad u), H2)
    xi_u = du.sum(axis=0) / sinh
    # xi xi u sums all mixed second derivatives d_i d_j u = -m_i m_j u
    xixi_u = -(marr.sum() ** 2) * u_arr / (sinh * sinh)

    integrand = (
        lap ** 2
        - 2.0 * bterm
        + jh ** 2
        + consts.c1 * lap * xixi_u
        - consts.c2 * xi_u * jh
        + consts.c3 * xixi_u ** 2
        - consts.c4 * xi_u ** 2
    )
    return float(integrand.mean() / (u_arr ** 2).mean())


def laplacian_comparison_check(orbit: OrbitSpec, u: TrigMonomial):
    """Both sides of Delta_1 u = Delta_2 u + tanh^2 r * xi_2(xi_2 u).

    lhs is the hyperbolic-metric eigenvalue m^T G1^{-1} m; rhs adds the Reeb
    correction to the flat eigenvalue.  The caller asserts equality; both are
    exact on the rational track.
    """
    mode = check_mode(u.mode, orbit.n)
    g1 = metric_hyperbolic(orbit)
    vec = [Fraction(m) for m in mode] if orbit.track == EXACT else [float(m) for m in mode]
    lhs = g1.inverse_quadratic(vec)
    rhs = laplacian_eigenvalue(orbit, u) + orbit.tanh_sq * xi_derivative_eigenvalue(orbit, u, 2)
    return lhs, rhs


def gradient_comparison_max_error(orbit: OrbitSpec, u: TrigMonomial, grid: int | None = None) -> float:
    """Max pointwise defect of |grad_1 u|_1^2 = |grad_2 u|_2^2 - t xi_2(u)^2."""
    mode = check_mode(u.mode, orbit.n)
    if grid is None:
        grid = default_grid(u)
    t = float(orbit.tanh_sq)
    sinh = math.sqrt(t / (1.0 - t))
    inv_r2 = np.array([1.0 / float(q) for q in orbit.radii_sq])

    g1 = np.array([[float(x) for x in row] for row in metric_hyperbolic(orbit).entries])
    g1_inv = np.linalg.inv(g1)

    psi = _angle_grid(mode, grid)
    dphase = -np.sin(psi) if u.phase == COS else np.cos(psi)
    du = np.array(mode, dtype=float)[:, None] * dphase[None, :]

    lhs = np.einsum("ik,ij,kj->j", g1_inv, du, du)
    rhs = np.einsum("i,ij->j", inv_r2, du ** 2) - t * (du.sum(axis=0) / sinh) ** 2
    return float(np.max(np.abs(lhs - rhs)))
