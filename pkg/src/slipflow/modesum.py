"""Generic eigenfunction-expansion sums for steady, starting and pulsatile flux.

Shape modules supply (λ_j, Q_j) pairs with Q_j = (∫φ_j)^2 / (λ_j ∫φ_j^2);
nothing here knows about any particular cross-section.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import DomainError


@dataclass(frozen=True)
class Mode:
    lam: float
    weight: float

    def __post_init__(self):
        if not self.lam > 0:
            raise DomainError(f"eigenvalue must be positive, got {self.lam}")
        if not self.weight >= 0:
            raise DomainError(f"flux weight must be nonnegative, got {self.weight}")


@dataclass(frozen=True)
class FluxSeries:
    """Truncated mode expansion; ``steady`` is the exact Q_steady / Δp when known."""

    modes: tuple
    steady: Optional[float] = None
    dp: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))
        lam = self.lambdas
        if lam.size and np.any(np.diff(lam) < 0):
            raise DomainError("modes must be ordered by ascending eigenvalue")
        if self.steady is not None and self.weights.sum() > self.steady * (1.0 + 1e-9):
            raise DomainError("mode weights exceed the closed-form steady flux")

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([m.lam for m in self.modes], dtype=float)

    @property
    def weights(self) -> np.ndarray:
        return np.array([m.weight for m in self.modes], dtype=float)


@dataclass(frozen=True)
class PartialSum:
    """A truncated sum with an estimate of the omitted tail (never added in)."""

    value: float
    tail: float
    n_terms: int

    def __float__(self) -> float:
        return self.value


def power_tail(terms: Sequence[float], fit: int = 10) -> float:
    """Tail of a positive series from a power-law fit c·j^(-p) to its last ``fit`` terms."""
    w = np.asarray(terms, dtype=float)
    n = w.size
    if n < 3:
        return math.inf if n else 0.0
    m = min(fit, n)
    j = np.arange(n - m + 1, n + 1, dtype=float)
    last = w[n - m:]
    if np.any(last <= 0):
        return math.inf
    slope, intercept = np.polyfit(np.log(j), np.log(last), 1)
    if slope >= -1.0:
        return math.inf
    log_tail = intercept + (slope + 1.0) * math.log(n + 0.5) - math.log(-slope - 1.0)
    return math.exp(log_tail) if log_tail < 700.0 else math.inf


def _sum(values: np.ndarray) -> float:
    # exactly rounded, so partial sums never decrease
    return math.fsum(values.tolist()) if values.size else 0.0


def q_steady_sum(fs: FluxSeries) -> PartialSum:
    """Δp Σ Q_j with a tail estimate."""
    w = fs.weights
    return PartialSum(fs.dp * _sum(w), fs.dp * power_tail(w), w.size)


def q_transient_sum(fs: FluxSeries, t):
    """Starting flow Q(t) = Q_steady - Δp Σ Q_j exp(-λ_j t)."""
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(tt < 0):
        raise DomainError("transient flux is defined for t >= 0")
    steady = fs.steady if fs.steady is not None else _sum(fs.weights)
    out = fs.dp * (steady - kernels.decay_sum(fs.lambdas, fs.weights, tt))
    return float(out[0]) if np.ndim(t) == 0 else out


def q_periodic_sum(fs: FluxSeries, omega: float) -> complex:
    """Δp Σ Q_j λ_j / (λ_j + iω)."""
    lam = fs.lambdas
    terms = fs.weights * lam / (lam + 1j * omega)
    return complex(fs.dp * np.sum(terms[::-1])) if terms.size else 0j


def completeness_area(raw: Sequence[float]) -> PartialSum:
    """Σ (∫φ_n)^2 / ∫φ_n^2, which tends to |Ω| for a complete mode set."""
    r = np.asarray(raw, dtype=float)
    return PartialSum(_sum(r), power_tail(r), r.size)
