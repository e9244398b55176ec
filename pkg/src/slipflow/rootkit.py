"""Special functions and bracketed scalar root finding.

Everything here is built from series, recurrences and fixed-rule quadrature
so results do not depend on an external special-function library.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import kernels
from .errors import ConvergenceError, DomainError, NoSignChangeError

BESSEL_X_MAX = 1000.0
BESSEL_Z_MAX = 30.0
SERIES_RTOL = kernels.SERIES_RTOL
SERIES_CAP = kernels.SERIES_CAP

_GL_X, _GL_W = np.polynomial.legendre.leggauss(20)


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Tolerance:
    rel: float = 2e-15
    abs: float = 1e-300
    max_iter: int = 200

    def __post_init__(self):
        if self.rel <= 0 or self.abs < 0 or self.max_iter < 1:
            raise DomainError("tolerance needs rel > 0, abs >= 0, max_iter >= 1")

    def width(self, x: float) -> float:
        return self.abs + self.rel * abs(x)


DEFAULT_TOL = Tolerance()


# ------------------------------------------------------------------ Bessel


def bessel_j(n: int, x: float) -> float:
    """Bessel function of the first kind J_n(x) for integer n >= 0."""
    if n < 0 or int(n) != n:
        raise DomainError(f"order must be a nonnegative integer, got {n}")
    if not abs(x) <= BESSEL_X_MAX:
        raise DomainError(f"|x| = {abs(x)} exceeds the supported range {BESSEL_X_MAX}")
    return float(kernels.jn_array(int(n), np.array([x], dtype=float))[0])


def bessel_j_array(n: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if n < 0 or int(n) != n:
        raise DomainError(f"order must be a nonnegative integer, got {n}")
    if x.size and not np.all(np.abs(x) <= BESSEL_X_MAX):
        raise DomainError(f"argument exceeds the supported range {BESSEL_X_MAX}")
    return kernels.jn_array(int(n), x.ravel()).reshape(x.shape)


def bessel_jp(n: int, x: float) -> float:
    """Derivative J_n'(x)."""
    if n == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x))


def bessel_j_complex(n: int, z: complex) -> complex:
    """J_0 or J_1 of a complex argument.

    Small |z| uses the ascending series. Otherwise Miller's backward
    recurrence, normalised by e^{iz} = J0 + 2 Σ i^k J_k (or its conjugate
    form), picking the sign for which the exponential grows like the J_k
    themselves so the normalising sum has no cancellation.
    """
    if n not in (0, 1):
        raise DomainError("complex Bessel supports orders 0 and 1 only")
    z = complex(z)
    if abs(z) > BESSEL_Z_MAX:
        raise DomainError(f"|z| = {abs(z)} exceeds the supported range {BESSEL_Z_MAX}")
    if abs(z) <= 1.0:
        return _jc_series(n, z)
    sgn = 1.0 if z.imag <= 0.0 else -1.0  # use e^{i sgn z}
    unit = 1j * sgn
    top = 2 * (int(abs(z)) + 30)
    j_next, j_cur = 0j, 1e-30 + 0j
    j0 = j1 = 0j
    norm = 0j
    for k in range(top, 0, -1):
        j_prev = 2.0 * k / z * j_cur - j_next
        norm += 2.0 * unit ** k * j_cur
        if k == 1:
            j1 = j_cur
        j_next, j_cur = j_cur, j_prev
        if abs(j_cur) > 1e250:
            j_next *= 1e-250
            j_cur *= 1e-250
            norm *= 1e-250
            j1 *= 1e-250
    j0 = j_cur
    norm += j0
    scale = cmath.exp(unit * z) / norm
    return (j0 if n == 0 else j1) * scale


def _jc_series(n: int, z: complex) -> complex:
    half = 0.5 * z
    term = complex(1.0) if n == 0 else half
    total = term
    q = -half * half
    for k in range(1, SERIES_CAP):
        term *= q / (k * (k + n))
        total += term
        if abs(term) <= SERIES_RTOL * abs(total):
            break
    return total


def bessel_j0_zeros(count: int) -> np.ndarray:
    """First ``count`` positive zeros of J_0."""
    k = np.arange(1, count + 1, dtype=float)
    lo = (k - 0.5) * math.pi
    hi = k * math.pi
    return solve_bracketed_many(lambda x: bessel_j_array(0, x), lo, hi)


# ------------------------------------------------------------ other specials


_SI_SWITCH = 4.0  # the alternating series loses digits to cancellation beyond this


def sine_integral(t: float) -> float:
    """Si(t) = integral of sin(s)/s over [0, t] for t >= 0."""
    if not t >= 0:
        raise DomainError("sine integral defined here for t >= 0")
    if t <= _SI_SWITCH:
        return _si_series(t)
    # Si at the switch plus Gauss-Legendre panels of length <= 1
    panels = int(math.ceil(t - _SI_SWITCH))
    edges = np.linspace(_SI_SWITCH, t, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    s = mid[:, None] + half[:, None] * _GL_X[None, :]
    vals = np.sin(s) / s
    return _si_series(_SI_SWITCH) + float(np.sum(half * (vals @ _GL_W)))


def _si_series(t: float) -> float:
    term = t
    total = t
    tt = t * t
    for k in range(1, SERIES_CAP):
        term *= -tt / ((2 * k) * (2 * k + 1))
        add = term / (2 * k + 1)
        total += add
        if abs(add) < SERIES_RTOL * abs(total):
            break
    return total


def erf(x: float) -> float:
    """Error function; positive series for |x| <= 3, continued fraction beyond."""
    if x < 0:
        return -erf(-x)
    if x <= 3.0:
        # erf x = 2/sqrt(pi) exp(-x^2) sum 2^n x^(2n+1) / (1*3*...*(2n+1))
        term = x
        total = x
        xx = 2.0 * x * x
        for n in range(1, SERIES_CAP):
            term *= xx / (2 * n + 1)
            total += term
            if term < SERIES_RTOL * total:
                break
        return 2.0 / math.sqrt(math.pi) * math.exp(-x * x) * total
    # erfc x = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    frac = x
    for k in range(60, 0, -1):
        frac = x + 0.5 * k / frac
    return 1.0 - math.exp(-x * x) / math.sqrt(math.pi) / frac


def elliptic_e(e: float) -> float:
    """Complete elliptic integral of the second kind with modulus e (AGM)."""
    if not 0.0 <= e < 1.0:
        raise DomainError("elliptic_e needs modulus in [0, 1)")
    a = 1.0
    b = math.sqrt(1.0 - e * e)
    c = e
    total = 0.5 * c * c
    power = 0.5
    for _ in range(60):
        if abs(c) < 1e-17:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        power *= 2.0
        total += power * c * c
    return math.pi / (2.0 * a) * (1.0 - total)


def gauss_legendre(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, panels: int = 64) -> float:
    """Composite 20-point Gauss-Legendre rule for a vectorized integrand."""
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    s = mid[:, None] + half[:, None] * _GL_X[None, :]
    return float(np.sum(half * (np.asarray(f(s)) @ _GL_W)))


# ------------------------------------------------------------- root finding


def solve_bracketed(f: Callable[[float], float], b: Bracket, tol: Tolerance = DEFAULT_TOL) -> float:
    """Root of ``f`` inside ``b``.

    Bisection refined by secant steps. A secant step that does not halve the
    bracket is followed by a probe one tolerance further on, which usually
    closes the bracket at once; otherwise the next step bisects.

    Raises:
        NoSignChangeError: ``f`` has the same sign at both ends.
        ConvergenceError: ``tol.max_iter`` steps without reaching the tolerance.
    """
    lo, hi = float(b.lo), float(b.hi)
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChangeError(f"f({lo}) = {flo} and f({hi}) = {fhi} share a sign")
    bisect = False
    for _ in range(tol.max_iter):
        width = hi - lo
        if width <= tol.width(max(abs(lo), abs(hi))):
            return lo if abs(flo) <= abs(fhi) else hi
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if bisect or not lo < x < hi:
            x = 0.5 * (lo + hi)
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        if hi - lo > 0.5 * width and not bisect:
            # probe just past x towards the far end
            step = tol.width(x)
            probe = x + step if x == lo else x - step
            if lo < probe < hi:
                fp = f(probe)
                if fp == 0.0:
                    return probe
                if (fp > 0) == (flo > 0):
                    lo, flo = probe, fp
                else:
                    hi, fhi = probe, fp
            bisect = hi - lo > 0.5 * width
        else:
            bisect = False
    raise ConvergenceError(f"no convergence in {tol.max_iter} iterations on [{lo}, {hi}]")


def solve_bracketed_many(f: Callable[[np.ndarray], np.ndarray], lo, hi, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Vectorized bisection over many independent brackets."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    flo = np.asarray(f(lo), dtype=float)
    fhi = np.asarray(f(hi), dtype=float)
    if np.any((flo > 0) == (fhi > 0)):
        bad = int(np.argmax((flo > 0) == (fhi > 0)))
        raise NoSignChangeError(f"no sign change on [{lo[bad]}, {hi[bad]}]")
    neg_lo = flo < 0
    for _ in range(tol.max_iter):
        if np.all(hi - lo <= tol.abs + tol.rel * np.maximum(np.abs(lo), np.abs(hi))):
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        fm = np.asarray(f(mid), dtype=float)
        go_lo = (fm < 0) == neg_lo
        lo = np.where(go_lo, mid, lo)
        hi = np.where(go_lo, hi, mid)
    raise ConvergenceError("vectorized bisection did not converge")

