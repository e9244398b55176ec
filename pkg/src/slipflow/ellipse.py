"""Unit-area ellipses x²/a² + a²y² = 1 treated as perturbed disks.

The small parameter is ε = (a² - a⁻²)/(a² + a⁻²), which is about 2(a - 1)
near a = 1. Replacing a by 1/a flips the sign of ε and gives the same
ellipse, so every second-order result here is even in ε.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .disk import lambda1_disk
from .errors import DomainError
from .geomfn import FourierBoundary
from .rootkit import bessel_j, bessel_j0_zeros, bessel_j_array

EPS_REGIME = 0.3
J0_FIRST = float(bessel_j0_zeros(1)[0])

# Day's tabulation of Hewitt's eigenvalue series in the eccentricity
HD_C4 = 0.034640
HD_C6 = 0.010355
HD_C8 = 0.004650


class PerturbationRegimeWarning(UserWarning):
    pass


def eps_of(a: float) -> float:
    if not a > 0:
        raise DomainError(f"axis parameter must be positive, got {a}")
    return (a * a - a ** -2) / (a * a + a ** -2)


def _eps_checked(a: float) -> float:
    e = eps_of(a)
    if abs(e) > EPS_REGIME:
        warnings.warn(f"|eps| = {abs(e):.3f} is beyond the perturbative regime {EPS_REGIME}",
                      PerturbationRegimeWarning, stacklevel=3)
    return e


def _check_beta(beta: float) -> None:
    if not beta >= 0:
        raise DomainError(f"slip length must be nonnegative, got {beta}")


# ------------------------------------------------------------ steady flux


def q_steady_ellipse_exact_b0(a: float, dp: float = 1.0) -> float:
    """No-slip flux π/(4(a² + a⁻²)) = (π/8)√(1 - ε²)."""
    if not a > 0:
        raise DomainError(f"axis parameter must be positive, got {a}")
    return dp * math.pi / (4.0 * (a * a + a ** -2))


@dataclass(frozen=True)
class FlowCoefficients:
    """u ≈ (1 - r²)/4 + β/2 + ε² t02 + ε t11 r² cos 2θ + ε² t22 r⁴ cos 4θ."""

    t11: float
    t02: float
    t22: float

    @property
    def q1(self) -> float:
        return -math.pi / 16.0 * (1.0 - 8.0 * self.t11 - 16.0 * self.t02)


def flow_coefficients(beta: float) -> FlowCoefficients:
    _check_beta(beta)
    t11 = 0.25 * (1.0 + beta) / (1.0 + 2.0 * beta)
    t02 = -(4.0 + 5.0 * beta + 6.0 * beta * beta) / (32.0 * (1.0 + 2.0 * beta))
    t22 = -beta * (1.0 - 2.0 * beta) / (32.0 * (1.0 + 4.0 * beta) * (1.0 + 2.0 * beta))
    return FlowCoefficients(t11, t02, t22)


def q1_coefficient(beta: float) -> float:
    """ε² coefficient of the flux, -(π/16)(1 + β(1 + 6β)/(2(2β + 1)))."""
    _check_beta(beta)
    return -math.pi / 16.0 * (1.0 + beta * (1.0 + 6.0 * beta) / (2.0 * (2.0 * beta + 1.0)))


def q_steady_ellipse_pert(a: float, beta: float, dp: float = 1.0) -> float:
    """Second-order steady flux (π/8)(1 + 4β) + q1 ε²."""
    _check_beta(beta)
    e = _eps_checked(a)
    return dp * (math.pi / 8.0 * (1.0 + 4.0 * beta) + q1_coefficient(beta) * e * e)


def flow_field_pert(r, theta, a: float, beta: float):
    """Second-order velocity field in polar coordinates about the centre."""
    e = eps_of(a)
    c = flow_coefficients(beta)
    r = np.asarray(r, dtype=float)
    th = np.asarray(theta, dtype=float)
    return (0.25 * (1.0 - r * r) + 0.5 * beta + e * e * c.t02 + e * c.t11 * r * r * np.cos(2.0 * th)
            + e * e * c.t22 * r ** 4 * np.cos(4.0 * th))


# ---------------------------------------------------------- eigenvalue


@dataclass(frozen=True)
class EigenCoefficients:
    """φ ≈ J0(γr) + ε a11 J2(γr) cos 2θ + ε² a22 J4(γr) cos 4θ with γ = γ0 + γ2 ε²."""

    gamma0: float
    a11: float
    a22: float
    gamma2: float


def gamma2_of(g0: float, beta: float) -> float:
    g2 = g0 * g0
    b = beta
    num = (b ** 4 * g2 ** 3 - g2 * (2.0 * g2 - 3.0) * b ** 3 + (2.0 * g2 + 3.0) * (g2 - 2.0) * b * b
           + (5.0 - 2.0 * g2) * b - 2.0 + g2)
    den = (b * b * g2 - 2.0 * b + 1.0) * (b * b * g2 + 1.0)
    return g0 / 16.0 * num / den


def eigen_coefficients(beta: float, gamma0: float | None = None) -> EigenCoefficients:
    _check_beta(beta)
    g0 = math.sqrt(lambda1_disk(1.0, beta)) if gamma0 is None else float(gamma0)
    g2 = g0 * g0
    b = beta
    base = b * b * g2 - 2.0 * b + 1.0
    a11 = g2 / 4.0 * (b * b * g2 - b + 1.0) / base
    n22 = (g2 * g2 * (g2 - 12.0) * b ** 4 - g2 * (2.0 * g2 - 31.0) * b ** 3
           + (-14.0 - 17.0 * g2 + 2.0 * g2 * g2) * b * b + (25.0 - 2.0 * g2) * b + g2 - 6.0)
    d22 = base * (-12.0 * b * b * g2 + g2 * g2 * b * b - 2.0 * b * g2 + 24.0 * b + g2 - 6.0)
    a22 = g2 * g2 / 128.0 * n22 / d22
    return EigenCoefficients(g0, a11, a22, gamma2_of(g0, b))


def lambda1_ellipse_pert(a: float, beta: float) -> float:
    """Second-order fundamental eigenvalue (γ0 + γ2 ε²)² of the unit-area ellipse."""
    _check_beta(beta)
    e = _eps_checked(a)
    c = eigen_coefficients(beta)
    return (c.gamma0 + c.gamma2 * e * e) ** 2


def eigenfunction_pert(r, theta, a: float, beta: float):
    """Second-order fundamental eigenfunction and its radial/angular derivatives."""
    e = eps_of(a)
    c = eigen_coefficients(beta)
    g = c.gamma0 + c.gamma2 * e * e
    r = np.asarray(r, dtype=float)
    th = np.asarray(theta, dtype=float)
    x = g * r
    j = {n: bessel_j_array(n, x.ravel()).reshape(x.shape) for n in range(6)}
    c2, c4 = np.cos(2.0 * th), np.cos(4.0 * th)
    phi = j[0] + c.a11 * e * j[2] * c2 + c.a22 * e * e * j[4] * c4
    # J_n' = (J_{n-1} - J_{n+1}) / 2
    d_r = g * (-j[1] + c.a11 * e * 0.5 * (j[1] - j[3]) * c2 + c.a22 * e * e * 0.5 * (j[3] - j[5]) * c4)
    d_t = -2.0 * c.a11 * e * j[2] * np.sin(2.0 * th) - 4.0 * c.a22 * e * e * j[4] * np.sin(4.0 * th)
    return phi, d_r, d_t


# -------------------------------------------------- no-slip classical routes


def rayleigh_coefficient(n: int) -> float:
    """1 + 2jJ_n'(j)/J_n(j) at the first zero j of J0."""
    if n < 1:
        raise DomainError("mode number must be at least 1")
    j = J0_FIRST
    jn = bessel_j(n, j)
    return 1.0 + 2.0 * (j * bessel_j(n - 1, j) - n * jn) / jn


def rayleigh_lambda_b0(fb: FourierBoundary) -> float:
    """Second-order no-slip eigenvalue from j/√λ = 1 + a0 - ¼ Σ c_n (a_n² + b_n²)."""
    ratio = 1.0 + fb.a0 - 0.25 * fb.coefficient_sums(rayleigh_coefficient)
    return (J0_FIRST / ratio) ** 2


def rayleigh_ellipse_coefficient() -> float:
    """(j²/2 - 1), the (a - 1)² coefficient of λ1/j² for the ellipse."""
    return 0.5 * (1.0 + rayleigh_coefficient(2))


def hewitt_day_lambda(a: float, printed_linear_term: bool = False) -> float:
    """No-slip eigenvalue of the unit-area ellipse from the eccentricity series.

    The series reads √λ/a = j(1 - e²/4 - c4 e⁴ - c6 e⁶ - c8 e⁸). Only the e²
    reading reproduces the (a - 1)² coefficient 3 - 32 c4; the e¹ variant is
    kept behind a flag for comparison.
    """
    if not a >= 1:
        raise DomainError("axis parameter must be at least 1")
    e = math.sqrt(1.0 - a ** -4)
    lead = e / 4.0 if printed_linear_term else e * e / 4.0
    s = 1.0 - lead - HD_C4 * e ** 4 - HD_C6 * e ** 6 - HD_C8 * e ** 8
    return (a * J0_FIRST * s) ** 2


def hewitt_day_coefficient() -> float:
    """(a - 1)² coefficient of λ/j² implied by the series: 3 - 32 c4."""
    return 3.0 - 32.0 * HD_C4


# ------------------------------------------- particular-solutions reference


def _mps_angle(lam: float, a: float, beta: float, terms: int, nodes: int) -> float:
    g = math.sqrt(lam)
    # quarter-ellipse symmetry: even in x and y, so cos(2kθ) on θ in (0, π/2)
    th = (np.arange(nodes) + 0.5) * (0.5 * math.pi / nodes)
    r = 1.0 / np.sqrt(np.cos(th) ** 2 / (a * a) + a * a * np.sin(th) ** 2)
    dr = -0.5 * r ** 3 * (a * a - 1.0 / (a * a)) * np.sin(2.0 * th)
    # interior points on a shrunken copy of the boundary
    ri = np.concatenate([s * r for s in (0.3, 0.6, 0.85)])
    thi = np.tile(th, 3)
    rows_b, rows_i = [], []
    for k in range(terms):
        n = 2 * k
        x = g * r
        jn = bessel_j_array(n, x)
        jp = 0.5 * (bessel_j_array(abs(n - 1), x) * (-1.0 if n == 0 else 1.0) - bessel_j_array(n + 1, x))
        c, s = np.cos(n * th), np.sin(n * th)
        phi = jn * c
        dphi_r = g * jp * c
        dphi_t = -n * jn * s
        # outward normal derivative on r = R(θ)
        dn = (dphi_r - dr / (r * r) * dphi_t) / np.sqrt(1.0 + (dr / r) ** 2)
        rows_b.append(phi + beta * dn)
        rows_i.append(bessel_j_array(n, g * ri) * np.cos(n * thi))
    bmat = np.array(rows_b).T
    imat = np.array(rows_i).T
    q, _ = np.linalg.qr(np.vstack([bmat, imat]))
    return float(np.linalg.svd(q[:nodes], compute_uv=False)[-1])


def lambda1_ellipse_mps(a: float, beta: float, terms: int = 14, nodes: int = 60) -> float:
    """Fundamental eigenvalue of the unit-area ellipse by particular solutions.

    Fourier-Bessel functions J_2k(√λ r) cos 2kθ already solve the Helmholtz
    equation; λ is placed where the slip condition can be met on the
    boundary by a combination that is not small inside (minimum of the
    boundary block's smallest singular value).
    """
    _check_beta(beta)
    if not a > 0:
        raise DomainError("axis parameter must be positive")
    a = max(a, 1.0 / a)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PerturbationRegimeWarning)
        guess = lambda1_ellipse_pert(min(a, 1.3), beta)
    lo, hi = 0.6 * guess, 1.4 * guess
    # coarse scan, then a bounded refinement around the best cell
    grid = np.linspace(lo, hi, 41)
    vals = [_mps_angle(x, a, beta, terms, nodes) for x in grid]
    i = int(np.argmin(vals))
    left, right = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    res = minimize_scalar(lambda x: _mps_angle(x, a, beta, terms, nodes), bounds=(left, right), method="bounded",
                          options={"xatol": 1e-13 * guess})
    return float(res.x)
