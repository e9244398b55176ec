"""Rectangles (-a, a) x (-b, b) with the slip condition.

Separable modes cos(μ x) cos(ν y), where μ tan(μ a) = 1/β. Also the
machinery used to show that the square minimises λ1 among rectangles of
fixed area: the slip-scaled root functions φ1, φ2, the μ bounds, the quartic
for the bound crossing and the variational upper bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from . import kernels
from .errors import ConvergenceError, DomainError, InsufficientModesError
from .modesum import FluxSeries, Mode, PartialSum, power_tail
from .rootkit import Bracket, solve_bracketed

DEFAULT_TERMS = 2000
DEFAULT_MODES = 64
Q0_TOL = 1e-6


def _check(beta: float, **dims) -> None:
    for k, v in dims.items():
        if not v > 0:
            raise DomainError(f"{k} must be positive, got {v}")
    if not beta >= 0:
        raise DomainError(f"slip length must be nonnegative, got {beta}")


# ------------------------------------------------------------------- roots


@dataclass(frozen=True)
class MuRoot:
    c: float
    beta: float
    branch: int
    mu: float

    @property
    def residual(self) -> float:
        """β μ tan(μ c) - 1, the root equation scaled by β."""
        return self.beta * self.mu * math.tan(self.mu * self.c) - 1.0


def mu_root(c: float, beta: float, branch: int = 0) -> MuRoot:
    """Root of μ tan(μ c) = 1/β in (kπ/c, (kπ + π/2)/c) for branch k."""
    _check(beta, c=c)
    if branch < 0:
        raise DomainError("branch must be nonnegative")
    mu = float(kernels.strip_roots(np.array([c]), beta, branch)[0])
    return MuRoot(float(c), float(beta), int(branch), mu)


def mu_roots(c, beta: float, branch: int = 0) -> np.ndarray:
    """Vectorized branch roots for an array of half-widths."""
    c = np.asarray(c, dtype=float)
    if np.any(c <= 0):
        raise DomainError("half-widths must be positive")
    _check(beta)
    return kernels.strip_roots(c.ravel(), beta, branch).reshape(c.shape)


def dmu_dc(c: float, beta: float) -> float:
    """dμ/dc = -μ(1 + β²μ²) / (β + c(1 + β²μ²)) on branch 0."""
    mu = mu_root(c, beta).mu
    s = 1.0 + beta * beta * mu * mu
    return -mu * s / (beta + c * s)


def lambda1_rect(a: float, b: float, beta: float) -> float:
    """Fundamental eigenvalue μ_X(a)^2 + μ_Y(b)^2."""
    _check(beta, a=a, b=b)
    mu = kernels.strip_roots(np.array([a, b], dtype=float), beta, 0)
    return float(mu[0] * mu[0] + mu[1] * mu[1])


def lambda1_square(h: float, beta: float) -> float:
    return lambda1_rect(h, h, beta)


# ------------------------------------------------------------------ bounds


@dataclass(frozen=True)
class MuBounds:
    lb: float
    ub: float


def mu_bounds(c: float, beta: float) -> MuBounds:
    """Bounds lb < μ(c, β) < ub obtained from rational bounds on tan."""
    _check(beta, c=c)
    lb = math.pi / math.sqrt(c * (4.0 * c + math.pi ** 2 * beta))
    # (π/4β)(-1 + sqrt(1 + 4β/c)) rewritten without the β -> 0 cancellation
    ub = math.pi / (c * (1.0 + math.sqrt(1.0 + 4.0 * beta / c)))
    return MuBounds(lb, ub)


def lambda_lb(h: float, r, beta: float):
    """μ_LB(hr)^2 + μ_LB(h/r)^2."""
    r = np.asarray(r, dtype=float)
    p2 = math.pi ** 2
    x = h * r
    y = h / r
    out = p2 / (x * (4.0 * x + p2 * beta)) + p2 / (y * (4.0 * y + p2 * beta))
    return float(out) if out.ndim == 0 else out


def lambda_ub(h: float, r, beta: float):
    """μ_UB(hr)^2 + μ_UB(h/r)^2."""
    r = np.asarray(r, dtype=float)

    def ub(c):
        return math.pi / (c * (1.0 + np.sqrt(1.0 + 4.0 * beta / c)))

    out = ub(h * r) ** 2 + ub(h / r) ** 2
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class QuarticRoots:
    r_minus: float
    r_plus: float
    b: float


def quartic_coefficients(h: float, beta: float, y: float) -> tuple:
    p2 = math.pi ** 2
    a1 = beta * p2 / (4.0 * h) - y * beta / h
    a2 = -y * (beta * beta * p2 * p2 + 16.0 * h * h) / (4.0 * h * h * p2)
    return a1, a2


def quartic_value(r: float, h: float, beta: float, y: float) -> float:
    a1, a2 = quartic_coefficients(h, beta, y)
    return r ** 4 + a1 * r ** 3 + a2 * r * r + a1 * r + 1.0


def quartic_rstar(h: float, beta: float, y: float) -> QuarticRoots:
    """Reciprocal roots r± of λ_LB(r) = y/h^2 via the quadratic in B = r + 1/r.

    Raises:
        DomainError: y/h^2 does not exceed λ_LB(1), so B <= 2 and no real r exists.
    """
    a1, a2 = quartic_coefficients(h, beta, y)
    disc = a1 * a1 - 4.0 * a2 + 8.0
    b = 0.5 * (-a1 + math.sqrt(disc)) if disc >= 0 else float("nan")
    if not b > 2.0:
        raise DomainError(f"B = {b} <= 2: y/h^2 must exceed λ_LB(1) = {lambda_lb(h, 1.0, beta)}")
    root = math.sqrt(b * b - 4.0)
    r_plus = 0.5 * (b + root)
    return QuarticRoots(1.0 / r_plus, r_plus, b)


def variational_bound(h: float, r: float, beta: float) -> float:
    """Rayleigh quotient of cos(μ□ x / r) cos(μ□ r y) on the rectangle (hr, h/r)."""
    _check(beta, h=h, r=r)
    lam = lambda1_square(h, beta)
    shape = 0.5 * (r * r + 1.0 / (r * r))
    if beta == 0.0:
        return lam * shape
    skew = (math.sqrt(r) - 1.0 / math.sqrt(r)) ** 2 * (r + 1.0 + 1.0 / r)
    return lam * (shape - beta * skew / (h * (1.0 + beta * beta * lam / 2.0) + beta))


def variational_bound_simple(h: float, r: float, beta: float) -> float:
    return 0.5 * lambda1_square(h, beta) * (r * r + 1.0 / (r * r))


# -------------------------------------------------------- slip-scaled roots


def phi1(z):
    """φ1(z) = arctan(1/z) / z."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("φ1 is defined for z > 0")
    out = np.arctan(1.0 / z) / z
    return float(out) if out.ndim == 0 else out


def phi2(z):
    """φ2(z) = φ1(sqrt z)."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("φ2 is defined for z > 0")
    s = np.sqrt(z)
    out = np.arctan(1.0 / s) / s
    return float(out) if out.ndim == 0 else out


def invert_phi1(v: float) -> float:
    """The z > 0 with φ1(z) = v (φ1 decreases from +inf to 0)."""
    if not v > 0:
        raise DomainError("φ1 takes only positive values")
    lo = min(1.0 / math.sqrt(v), 1.0 / v) * 0.25
    hi = max(1.0 / math.sqrt(v), 2.0 / v) * 4.0
    for _ in range(200):
        if phi1(lo) > v:
            break
        lo *= 0.5
    for _ in range(200):
        if phi1(hi) < v:
            break
        hi *= 2.0
    return solve_bracketed(lambda z: phi1(z) - v, Bracket(lo, hi))


def mu_hat(c: float, beta: float) -> float:
    """Slip-scaled root βμ(c, β)."""
    return beta * mu_root(c, beta).mu


# ----------------------------------------------------------- steady flux


def _xp_terms(a: float, b: float, beta: float, n_terms: int, coefficient: str) -> np.ndarray:
    # X_p solves cos X = (β/a) X sin X, i.e. X = a μ_p(a)
    xp = a * kernels.strip_roots(a, beta, np.arange(n_terms))
    sx = np.sin(xp)
    ap = 2.0 * (a / xp) ** 3 * sx / (beta * sx * sx + a)
    th = np.tanh(b * xp / a)
    if coefficient == "derived":
        damp = 1.0 + beta * xp / a * th
    elif coefficient == "printed":
        damp = 1.0 + beta / a * th
    else:
        raise DomainError(f"unknown coefficient variant {coefficient!r}")
    # C_p sinh(b X_p / a) written with tanh to avoid overflow
    return ap * th / damp * sx / (xp * xp)


def q_steady_rect_series(a: float, b: float, beta: float, dp: float = 1.0, n_terms: int = DEFAULT_TERMS,
                         coefficient: str = "derived") -> PartialSum:
    """Steady flux from the single series in X_p, with the tail estimate of the series."""
    _check(beta, a=a, b=b)
    if n_terms < 1:
        raise DomainError("need at least one term")
    terms = _xp_terms(a, b, beta, n_terms, coefficient)
    base = 4.0 / 3.0 * a ** 3 * b + 4.0 * beta * a * a * b
    total = base - 4.0 * a * a * float(np.sum(terms[::-1]))
    return PartialSum(dp * total, dp * 4.0 * a * a * power_tail(terms), n_terms)


def q_steady_rect(a: float, b: float, beta: float, dp: float = 1.0, n_terms: int = DEFAULT_TERMS,
                  coefficient: str = "derived") -> float:
    return q_steady_rect_series(a, b, beta, dp, n_terms, coefficient).value


# ------------------------------------------------------------ product modes


def _strip_factors(c: float, beta: float, n: int):
    mu = kernels.strip_roots(c, beta, np.arange(n))
    integral = 2.0 * np.sin(mu * c) / mu
    norm = c + np.sin(2.0 * mu * c) / (2.0 * mu)
    return mu, integral * integral / norm


@dataclass(frozen=True)
class RectSpectrum:
    a: float
    b: float
    beta: float
    mu_x: np.ndarray
    mu_y: np.ndarray
    eigenvalues: np.ndarray
    raw_integrals: np.ndarray

    @property
    def weights(self) -> np.ndarray:
        return self.raw_integrals / self.eigenvalues

    def ordered(self):
        """(λ, Q_j, raw integral) flattened and sorted by eigenvalue."""
        lam = self.eigenvalues.ravel()
        order = np.argsort(lam, kind="stable")
        return lam[order], self.weights.ravel()[order], self.raw_integrals.ravel()[order]

    def flux_series(self, dp: float = 1.0, steady=None) -> FluxSeries:
        lam, w, _ = self.ordered()
        return FluxSeries(tuple(Mode(float(l), float(q)) for l, q in zip(lam, w)), steady, dp)


def rect_spectrum(a: float, b: float, beta: float, n_x: int = DEFAULT_MODES, n_y: int = DEFAULT_MODES) -> RectSpectrum:
    """Even product modes cos(μ_p x) cos(ν_q y); odd modes have zero mean and carry no flux."""
    _check(beta, a=a, b=b)
    if n_x < 1 or n_y < 1:
        raise DomainError("need at least one mode per direction")
    mx, rx = _strip_factors(a, beta, n_x)
    my, ry = _strip_factors(b, beta, n_y)
    lam = mx[:, None] ** 2 + my[None, :] ** 2
    raw = rx[:, None] * ry[None, :]
    for arr in (mx, my, lam, raw):
        arr.setflags(write=False)
    return RectSpectrum(float(a), float(b), float(beta), mx, my, lam, raw)


def q_transient_rect(a: float, b: float, beta: float, dp: float, t, n_x: int = DEFAULT_MODES,
                     n_y: int = DEFAULT_MODES, q0_tol: float = Q0_TOL):
    """Starting-flow flux from the product-mode expansion.

    Raises:
        InsufficientModesError: the truncated sum leaves |Q(0)| above ``q0_tol`` Q_steady.
    """
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(tt < 0):
        raise DomainError("transient flux is defined for t >= 0")
    qs = q_steady_rect(a, b, beta)
    lam, w, _ = rect_spectrum(a, b, beta, n_x, n_y).ordered()
    q0 = qs - float(np.sum(w[::-1]))
    if abs(q0) > q0_tol * qs:
        raise InsufficientModesError(f"Q(0) = {q0 * dp:.3e} with {n_x}x{n_y} modes; raise the mode count")
    out = dp * (qs - kernels.decay_sum(lam, w, tt))
    return float(out[0]) if np.ndim(t) == 0 else out


# --------------------------------------------------------- square β-flow


def square_lambda_ode(h: float, betas, rtol: float = 1e-11) -> np.ndarray:
    """Integrate dλ/dβ = -2λ/(β + h(1 + β²λ/2)) from λ(0) = π²/(2h²)."""
    betas = np.asarray(betas, dtype=float)

    def rhs(beta, lam):
        return -2.0 * lam / (beta + h * (1.0 + beta * beta * lam / 2.0))

    sol = solve_ivp(rhs, (0.0, float(betas.max())), [math.pi ** 2 / (2.0 * h * h)], method="DOP853",
                    t_eval=betas, rtol=rtol, atol=1e-14)
    if not sol.success:
        raise ConvergenceError(f"square eigenvalue flow failed: {sol.message}")
    return sol.y[0]
