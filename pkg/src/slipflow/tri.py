"""Equilateral triangle with vertices (-a, 0), (a, 0), (0, a√3).

The fundamental slip eigenvalue comes from Lamé's construction. On the unit
triangle (a = 1) it is λ = (2t/β)^2, where t is the first positive root of
tan(t√3/β) = 3t/(2t² - 1). Other sizes go through the scaling law
λ(a, β) = λ(1, β/a)/a².
"""
from __future__ import annotations

import math

import numpy as np
from scipy.integrate import solve_ivp

from .errors import ConvergenceError, DomainError
from .rootkit import Bracket, solve_bracketed

SQ3 = math.sqrt(3.0)
LAMBDA_B0 = 4.0 * math.pi ** 2 / 3.0  # unit triangle, no slip
SPLICE_SQRT_LAMBDA = math.pi / SQ3
SPLICE_BETA = math.sqrt(6.0) / math.pi
QUAD_ORDER = 48


def _check(a: float, beta: float) -> None:
    if not a > 0:
        raise DomainError(f"half-side must be positive, got {a}")
    if not beta >= 0:
        raise DomainError(f"slip length must be nonnegative, got {beta}")


def q_steady_tri(a: float, beta: float, dp: float = 1.0) -> float:
    """Closed-form steady flux β|Ω|²/|∂Ω| + S0 + β(S∞ - S0)/(c0 + β), times Δp."""
    _check(a, beta)
    area = SQ3 * a * a
    s0 = SQ3 * a ** 4 / 20.0
    s_inf = a ** 4 / (4.0 * SQ3)
    c0 = a / SQ3
    return dp * (beta * area * area / (6.0 * a) + s0 + beta / (c0 + beta) * (s_inf - s0))


def transcendental(t: float, beta: float) -> float:
    """sin(t√3/β)(2t² - 1) - 3t cos(t√3/β); zero exactly when the tan form holds."""
    th = t * SQ3 / beta
    return math.sin(th) * (2.0 * t * t - 1.0) - 3.0 * t * math.cos(th)


def t1_root(beta: float) -> float:
    """First positive root t1 of the Lamé equation for the unit triangle (β > 0).

    Solved in the offset δ = π - t√3/β, which stays accurate when β is tiny
    and the root crowds against πβ/√3. At δ = 0 the residual is 3t > 0 and
    it turns negative as δ approaches π; the crossing in between is unique.
    """
    if not beta > 0:
        raise DomainError("t1 is defined for positive slip length")

    def g(d: float) -> float:
        t = beta * (math.pi - d) / SQ3
        return math.sin(d) * (2.0 * t * t - 1.0) + 3.0 * t * math.cos(d)

    # δ ≈ √3πβ for small β; widen to the full range if that guess fails
    hi = min(math.pi * (1.0 - 1e-9), 4.0 * SQ3 * math.pi * beta)
    if g(hi) >= 0.0:
        hi = math.pi * (1.0 - 1e-9)
    d = solve_bracketed(g, Bracket(0.0, hi))
    return beta * (math.pi - d) / SQ3


def lambda1_tri(a: float, beta: float) -> float:
    """Fundamental slip eigenvalue of the triangle of half-side a."""
    _check(a, beta)
    b = beta / a
    if b == 0.0:
        return LAMBDA_B0 / (a * a)
    t = t1_root(b)
    return (2.0 * t / b) ** 2 / (a * a)


def beta_of_lambda_tri(lam: float) -> float:
    """Slip length for which the unit triangle has fundamental eigenvalue ``lam``.

    Defined on 0 < λ ≤ 4π²/3; the two branches splice at √λ = π/√3.
    """
    if not 0.0 < lam <= LAMBDA_B0 * (1.0 + 1e-15):
        raise DomainError(f"eigenvalue must lie in (0, 4π²/3], got {lam}")
    s = math.sqrt(lam)
    if s >= math.sqrt(LAMBDA_B0):
        return 0.0
    if s == SPLICE_SQRT_LAMBDA:
        return SPLICE_BETA
    tau = math.tan(SQ3 * s / 2.0)
    root = math.sqrt(9.0 + 8.0 * tau * tau)
    if s < SPLICE_SQRT_LAMBDA:
        return (3.0 + root) / (2.0 * s * tau)
    # 3 - root and tau are both negative here; this form avoids the cancellation
    return -4.0 * tau / (s * (3.0 + root))


def dlambda_dbeta(beta: float, lam: float) -> float:
    """Slope of the unit-triangle eigenvalue curve."""
    b2 = beta * beta
    num = -12.0 * lam * (b2 * lam + 2.0)
    den = SQ3 * b2 * b2 * lam * lam + b2 * (5.0 * SQ3 + 6.0 * beta) * lam + 4.0 * SQ3 + 12.0 * beta
    return num / den


def lambda1_tri_ode(beta_max: float, steps: int = 64, rtol: float = 1e-12):
    """Integrate the eigenvalue flow from λ(0) = 4π²/3 on the unit triangle.

    Returns (betas, lambdas) on ``steps + 1`` equispaced slip lengths.
    """
    if not beta_max > 0:
        raise DomainError("beta_max must be positive")
    betas = np.linspace(0.0, beta_max, steps + 1)
    sol = solve_ivp(lambda b, y: [dlambda_dbeta(b, y[0])], (0.0, beta_max), [LAMBDA_B0], method="DOP853",
                    t_eval=betas, rtol=rtol, atol=1e-14)
    if not sol.success:
        raise ConvergenceError(f"triangle eigenvalue flow failed: {sol.message}")
    return betas, sol.y[0]


# ------------------------------------------------------- fundamental mode


def mode1_params(beta: float):
    """(α, b) of the fundamental Lamé mode on the unit triangle; λ1 = 4b²."""
    if beta == 0.0:
        return 0.0, math.pi / SQ3
    t = t1_root(beta)
    return math.atan(t), t / beta


def mode1(x, y, beta: float):
    """Fundamental eigenfunction on the unit triangle (unnormalised)."""
    al, b = mode1_params(beta)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (np.sin(al + b * SQ3 * x + b * y) + np.sin(al - b * SQ3 * x + b * y)
            + np.sin(al + b * SQ3 - 2.0 * b * y))


def mode1_grad(x, y, beta: float):
    al, b = mode1_params(beta)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c1 = np.cos(al + b * SQ3 * x + b * y)
    c2 = np.cos(al - b * SQ3 * x + b * y)
    c3 = np.cos(al + b * SQ3 - 2.0 * b * y)
    return b * SQ3 * (c1 - c2), b * (c1 + c2 - 2.0 * c3)


def _triangle_nodes(order: int = QUAD_ORDER):
    # collapsed tensor Gauss rule on the unit triangle
    g, w = np.polynomial.legendre.leggauss(order)
    u = 0.5 * (g + 1.0)
    wu = 0.5 * w
    U, V = np.meshgrid(u, u, indexing="ij")
    W = np.outer(wu, wu) * U
    p0 = np.array([-1.0, 0.0])
    p1 = np.array([1.0, 0.0])
    p2 = np.array([0.0, SQ3])
    pts = p0[:, None, None] + U * (p1 - p0)[:, None, None] + U * V * (p2 - p1)[:, None, None]
    jac = 2.0 * SQ3
    return pts[0].ravel(), pts[1].ravel(), (W * jac).ravel()


def mode1_weight_tri(a: float, beta: float) -> float:
    """Flux weight Q_1 = (∫φ1)^2 / (λ1 ∫φ1^2) of the fundamental mode."""
    _check(a, beta)
    b = beta / a
    x, y, w = _triangle_nodes()
    v = mode1(x, y, b)
    lam = lambda1_tri(1.0, b)
    return a ** 4 * float(np.dot(w, v)) ** 2 / (lam * float(np.dot(w, v * v)))
