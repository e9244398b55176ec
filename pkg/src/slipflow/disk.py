"""Circular cross-section: steady flux, Robin spectrum, starting and pulsatile flow."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, InsufficientModesError
from .modesum import FluxSeries, Mode
from .rootkit import BESSEL_Z_MAX, bessel_j0_zeros, bessel_j_array, bessel_j_complex, solve_bracketed_many

DEFAULT_MODES = 64
Q0_TOL = 1e-6


@dataclass(frozen=True)
class DiskSpectrum:
    radius: float
    beta: float
    roots: np.ndarray
    eigenvalues: np.ndarray

    def __post_init__(self):
        self.roots.setflags(write=False)
        self.eigenvalues.setflags(write=False)

    @property
    def raw_integrals(self) -> np.ndarray:
        """(∫φ)^2 / ∫φ^2 for each radial mode J0(γ r / a)."""
        g = self.roots
        j0 = bessel_j_array(0, g)
        j1 = bessel_j_array(1, g)
        a2 = self.radius ** 2
        return 4.0 * math.pi * a2 * j1 * j1 / (g * g * (j0 * j0 + j1 * j1))

    @property
    def weights(self) -> np.ndarray:
        """Flux weights Q_j = (∫φ)^2 / (λ ∫φ^2)."""
        return self.raw_integrals / self.eigenvalues

    def residuals(self, scaled: bool = False) -> np.ndarray:
        """J0(γ) - (β/a)γJ1(γ) at each root.

        With ``scaled`` the residual is divided by 1 + (β/a)γ, the size of
        the terms being cancelled; the raw value grows with β/a through
        rounding in γ alone.
        """
        g = self.roots
        k = self.beta / self.radius
        r = bessel_j_array(0, g) - k * g * bessel_j_array(1, g)
        return r / (1.0 + k * g) if scaled else r


def _check(a: float, beta: float) -> None:
    if not a > 0:
        raise DomainError(f"radius must be positive, got {a}")
    if not beta >= 0:
        raise DomainError(f"slip length must be nonnegative, got {beta}")


def q_steady_disk(a: float, beta: float, dp: float = 1.0) -> float:
    """Steady flux π a^3 (a + 4β) Δp / 8."""
    _check(a, beta)
    return math.pi * a ** 3 * (a + 4.0 * beta) * dp / 8.0


def disk_spectrum(a: float, beta: float, n_modes: int = DEFAULT_MODES) -> DiskSpectrum:
    """First ``n_modes`` radially symmetric Robin eigenvalues of the disk of radius a."""
    _check(a, beta)
    if n_modes < 1:
        raise DomainError("need at least one mode")
    zeros = bessel_j0_zeros(n_modes)
    if beta == 0.0:
        roots = zeros
    else:
        k = beta / a
        lo = np.concatenate(([0.0], zeros[:-1]))
        roots = solve_bracketed_many(lambda g: bessel_j_array(0, g) - k * g * bessel_j_array(1, g), lo, zeros)
    if np.any(np.diff(roots) <= 0):
        raise DomainError("disk roots not strictly increasing")
    return DiskSpectrum(float(a), float(beta), roots, (roots / a) ** 2)


def lambda1_disk(a: float, beta: float) -> float:
    return float(disk_spectrum(a, beta, 1).eigenvalues[0])


def flux_series(a: float, beta: float, dp: float = 1.0, n_modes: int = DEFAULT_MODES) -> FluxSeries:
    spec = disk_spectrum(a, beta, n_modes)
    modes = tuple(Mode(float(l), float(w)) for l, w in zip(spec.eigenvalues, spec.weights))
    return FluxSeries(modes, q_steady_disk(a, beta, 1.0), dp)


def q_transient_disk(a: float, beta: float, dp: float, t, n_modes: int = DEFAULT_MODES, q0_tol: float = Q0_TOL):
    """Starting-flow flux Q(t) = Q_steady - Δp Σ Q_j exp(-λ_j t).

    Raises:
        InsufficientModesError: the truncated sum leaves |Q(0)| above ``q0_tol`` Q_steady.
    """
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(tt < 0):
        raise DomainError("transient flux is defined for t >= 0")
    spec = disk_spectrum(a, beta, n_modes)
    w = spec.weights
    qs = q_steady_disk(a, beta, 1.0)
    q0 = qs - float(np.sum(w[::-1]))
    if abs(q0) > q0_tol * qs:
        raise InsufficientModesError(f"Q(0) = {q0 * dp:.3e} with {n_modes} modes; raise n_modes")
    out = dp * (qs - kernels.decay_sum(spec.eigenvalues, w, tt))
    return float(out[0]) if np.ndim(t) == 0 else out


def q_periodic_disk(a: float, beta: float, omega: float, dp: float = 1.0) -> complex:
    """Complex flux amplitude q with Q(t) = q exp(iωt) for the pressure gradient Δp exp(iωt)."""
    _check(a, beta)
    if not omega > 0:
        raise DomainError("angular frequency must be positive")
    sigma = (1.0 - 1.0j) * math.sqrt(omega) / math.sqrt(2.0)
    z = sigma * a
    if abs(z) > BESSEL_Z_MAX:
        raise DomainError(f"|σa| = {abs(z):.3g} exceeds the complex Bessel guard {BESSEL_Z_MAX}")
    j0 = bessel_j_complex(0, z)
    j1 = bessel_j_complex(1, z)
    num = 2.0 * j1 - a * sigma * j0 + a * beta * sigma * sigma * j1
    den = sigma ** 3 * (j0 - beta * sigma * j1)
    return dp * math.pi * a * num / den


def periodic_phase_lag(a: float, beta: float, omega: float) -> float:
    """Phase of the flux relative to the pressure gradient (radians, negative = lag)."""
    return cmath.phase(q_periodic_disk(a, beta, omega))
