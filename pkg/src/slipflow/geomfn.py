"""Cross-section shapes and their geometric functionals."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import DomainError, UnavailableError
from .rootkit import elliptic_e

QUAD_NODES = 1024
STAR_CHECK_NODES = 720


@dataclass(frozen=True)
class Disk:
    radius: float = 1.0

    def __post_init__(self):
        _positive(radius=self.radius)

    @classmethod
    def with_area(cls, area: float) -> "Disk":
        return cls(math.sqrt(area / math.pi))


@dataclass(frozen=True)
class Rectangle:
    """Rectangle (-a, a) x (-b, b)."""

    a: float
    b: float

    def __post_init__(self):
        _positive(a=self.a, b=self.b)

    @classmethod
    def with_area(cls, area: float, aspect: float = 1.0) -> "Rectangle":
        """Rectangle of given area whose side ratio b/a equals ``aspect``."""
        a = math.sqrt(area / (4.0 * aspect))
        return cls(a, aspect * a)


@dataclass(frozen=True)
class EquilateralTriangle:
    """Vertices (-a, 0), (a, 0), (0, a*sqrt(3))."""

    a: float = 1.0

    def __post_init__(self):
        _positive(a=self.a)

    @classmethod
    def with_area(cls, area: float) -> "EquilateralTriangle":
        return cls(math.sqrt(area / math.sqrt(3.0)))


@dataclass(frozen=True)
class RegularPolygon:
    n: int
    area: float = math.pi

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 3:
            raise DomainError(f"regular polygon needs n >= 3, got {self.n}")
        _positive(area=self.area)

    @property
    def side(self) -> float:
        return math.sqrt(4.0 * self.area * math.tan(math.pi / self.n) / self.n)

    @property
    def inradius(self) -> float:
        return self.side / (2.0 * math.tan(math.pi / self.n))

    @property
    def circumradius(self) -> float:
        return self.side / (2.0 * math.sin(math.pi / self.n))


@dataclass(frozen=True)
class EllipseUnitArea:
    """Ellipse x^2/a^2 + a^2 y^2 = 1, area pi."""

    a: float = 1.0

    def __post_init__(self):
        if not self.a >= 1.0:
            raise DomainError(f"axis parameter must be >= 1, got {self.a}")

    @property
    def eps(self) -> float:
        a2 = self.a * self.a
        return (a2 - 1.0 / a2) / (a2 + 1.0 / a2)

    @property
    def eccentricity(self) -> float:
        return math.sqrt(1.0 - self.a ** -4)


@dataclass(frozen=True)
class FourierBoundary:
    """Boundary r = 1 + a0 + sum_n (an[n-1] cos n t + bn[n-1] sin n t)."""

    a0: float = 0.0
    an: tuple = ()
    bn: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "an", tuple(float(v) for v in self.an))
        object.__setattr__(self, "bn", tuple(float(v) for v in self.bn))
        t = np.linspace(0.0, 2.0 * np.pi, STAR_CHECK_NODES, endpoint=False)
        if np.any(self.radius(t) <= 0.0):
            raise DomainError("Fourier boundary radius must stay positive")

    def radius(self, t):
        t = np.asarray(t, dtype=float)
        r = 1.0 + self.a0 + np.zeros_like(t)
        for n, c in enumerate(self.an, start=1):
            r = r + c * np.cos(n * t)
        for n, c in enumerate(self.bn, start=1):
            r = r + c * np.sin(n * t)
        return r

    def radius_prime(self, t):
        t = np.asarray(t, dtype=float)
        d = np.zeros_like(t)
        for n, c in enumerate(self.an, start=1):
            d = d - n * c * np.sin(n * t)
        for n, c in enumerate(self.bn, start=1):
            d = d + n * c * np.cos(n * t)
        return d

    def coefficient_sums(self, weight=lambda n: 1.0) -> float:
        """sum_n weight(n) (a_n^2 + b_n^2)."""
        m = max(len(self.an), len(self.bn))
        an = list(self.an) + [0.0] * (m - len(self.an))
        bn = list(self.bn) + [0.0] * (m - len(self.bn))
        return sum(weight(n) * (an[n - 1] ** 2 + bn[n - 1] ** 2) for n in range(1, m + 1))


ShapeSpec = Union[Disk, Rectangle, EquilateralTriangle, RegularPolygon, EllipseUnitArea, FourierBoundary]


@dataclass(frozen=True)
class GeometricSummary:
    area: float
    perimeter: float
    polar_moment: float
    i_max: Optional[float]
    i_min: Optional[float]
    b_functional: Optional[float]

    @property
    def deficit(self) -> float:
        return self.perimeter ** 2 - 4.0 * math.pi * self.area

    @property
    def deficit_ratio(self) -> float:
        """|dΩ|^2 / (4 pi |Ω|) - 1."""
        return self.perimeter ** 2 / (4.0 * math.pi * self.area) - 1.0


def _positive(**kw):
    for k, v in kw.items():
        if not v > 0:
            raise DomainError(f"{k} must be positive, got {v}")


def summary(s: ShapeSpec) -> GeometricSummary:
    """Area, perimeter, centroidal polar moment, principal moments and B."""
    if isinstance(s, Disk):
        a = s.radius
        i = math.pi * a ** 4 / 4.0
        return GeometricSummary(math.pi * a * a, 2.0 * math.pi * a, 2.0 * i, i, i, 2.0 * math.pi)
    if isinstance(s, Rectangle):
        a, b = s.a, s.b
        area = 4.0 * a * b
        ix = area * a * a / 3.0
        iy = area * b * b / 3.0
        return GeometricSummary(area, 4.0 * (a + b), ix + iy, max(ix, iy), min(ix, iy), 4.0 * b / a + 4.0 * a / b)
    if isinstance(s, EquilateralTriangle):
        return _polygon_summary(3, math.sqrt(3.0) * s.a * s.a)
    if isinstance(s, RegularPolygon):
        return _polygon_summary(s.n, s.area)
    if isinstance(s, EllipseUnitArea):
        a = s.a
        ix = math.pi * a * a / 4.0
        iy = math.pi / (4.0 * a * a)
        perim = 4.0 * a * elliptic_e(s.eccentricity)
        return GeometricSummary(math.pi, perim, ix + iy, ix, iy, math.pi * (a * a + 1.0 / (a * a)))
    if isinstance(s, FourierBoundary):
        return _fourier_summary(s)
    raise TypeError(f"unsupported shape {s!r}")


def _polygon_summary(n: int, area: float) -> GeometricSummary:
    t = math.tan(math.pi / n)
    side = math.sqrt(4.0 * area * t / n)
    inradius = side / (2.0 * t)
    ic = area * area / (6.0 * n) * (t + 3.0 / t)
    return GeometricSummary(area, n * side, ic, ic / 2.0, ic / 2.0, n * side / inradius)


def _fourier_geometry(fb: FourierBoundary, nodes: int = QUAD_NODES):
    t = np.linspace(0.0, 2.0 * np.pi, nodes, endpoint=False)
    w = 2.0 * np.pi / nodes
    r = fb.radius(t)
    rp = fb.radius_prime(t)
    area = 0.5 * w * np.sum(r ** 2)
    xc = w * np.sum(r ** 3 * np.cos(t)) / (3.0 * area)
    yc = w * np.sum(r ** 3 * np.sin(t)) / (3.0 * area)
    sxx = 0.25 * w * np.sum(r ** 4 * np.cos(t) ** 2) - area * xc * xc
    syy = 0.25 * w * np.sum(r ** 4 * np.sin(t) ** 2) - area * yc * yc
    sxy = 0.25 * w * np.sum(r ** 4 * np.cos(t) * np.sin(t)) - area * xc * yc
    perim = w * np.sum(np.sqrt(r ** 2 + rp ** 2))
    return t, r, rp, float(area), float(xc), float(yc), float(sxx), float(syy), float(sxy), float(perim)


def _fourier_summary(fb: FourierBoundary) -> GeometricSummary:
    t, r, rp, area, xc, yc, sxx, syy, sxy, perim = _fourier_geometry(fb)
    ic = sxx + syy
    half = math.hypot(0.5 * (sxx - syy), sxy)
    imax = 0.5 * ic + half
    imin = 0.5 * ic - half
    try:
        b = _fourier_b(fb, xc, yc)
    except UnavailableError:
        b = None
    return GeometricSummary(area, perim, ic, imax, imin, b)


def _fourier_b(fb: FourierBoundary, xc: float, yc: float, nodes: int = QUAD_NODES) -> float:
    def parts(t):
        r = fb.radius(t)
        rp = fb.radius_prime(t)
        x, y = r * np.cos(t), r * np.sin(t)
        dx = rp * np.cos(t) - r * np.sin(t)
        dy = rp * np.sin(t) + r * np.cos(t)
        return (x - xc) * dy - (y - yc) * dx, dx * dx + dy * dy

    check, _ = parts(np.linspace(0.0, 2.0 * np.pi, STAR_CHECK_NODES, endpoint=False))
    if np.any(check <= 0.0):
        raise UnavailableError("boundary is not star-shaped about its centroid")
    t = np.linspace(0.0, 2.0 * np.pi, nodes, endpoint=False)
    support, speed2 = parts(t)
    return float(2.0 * np.pi / nodes * np.sum(speed2 / support))


def b_functional(s: ShapeSpec) -> float:
    """B evaluated at the centroid; raises when the shape is not star-shaped there."""
    b = summary(s).b_functional
    if b is None:
        raise UnavailableError("B-functional unavailable for this boundary")
    return b


# -------------------------------------------------------------- asymmetry

_ALPHA2_FIXTURES = {3: 0.3649426110, 4: 0.1810919377, 6: 0.0744657545}


def fraenkel_alpha_ellipse(a: float) -> float:
    """Fraenkel asymmetry of the unit-area ellipse with axis parameter a >= 1."""
    if not a >= 1.0:
        raise DomainError("ellipse asymmetry formula is stated for a >= 1")
    return 2.0 / math.pi * math.atan((a - 1.0 / a) / 2.0)


def fraenkel_alpha_fixture(n: int) -> float:
    """Tabulated asymmetry of the regular n-gon (n in 3, 4, 6)."""
    try:
        return _ALPHA2_FIXTURES[n] / 2.0
    except KeyError:
        raise DomainError(f"no asymmetry fixture for n = {n}") from None


def ngon_deficit_ratio(n: int) -> float:
    return math.tan(math.pi / n) / (math.pi / n) - 1.0


def polygon_table_row(n: int) -> dict:
    """Deficit ratio, polar-moment excess and asymmetry bound for the regular n-gon."""
    g = summary(RegularPolygon(n, 1.0))
    alpha = fraenkel_alpha_fixture(n)
    return {
        "n": n,
        "two_alpha": 2.0 * alpha,
        "deficit_ratio": g.deficit_ratio,
        "moment_excess": math.sqrt(2.0 * math.pi * g.polar_moment) / g.area - 1.0,
        "asymmetry_bound": math.sqrt(1.0 + 2.0 * alpha * alpha) - 1.0,
    }


# ------------------------------------------------- near-circular estimators


@dataclass(frozen=True)
class Estimate:
    second_order: float
    exact: float

    @property
    def error(self) -> float:
        return self.second_order - self.exact


@dataclass(frozen=True)
class FourierFunctionals:
    """Radii normalised to the unit disk: sqrt(|Ω|/π), |∂Ω|/(2π), (2 I_c/π)^(1/4)."""

    sqrt_area_radius: Estimate
    perimeter: Estimate
    moment_radius: Estimate


def moment_coefficient(n: int) -> float:
    """Second-order coefficient of (2 I_c/π)^(1/4) for mode n (translation mode n=1 carries 1)."""
    return 1.0 if n == 1 else 3.0


def fourier_functionals(fb: FourierBoundary) -> FourierFunctionals:
    g = summary(fb)
    base = 1.0 + fb.a0
    area_est = base + 0.25 * fb.coefficient_sums()
    perim_est = base + 0.25 * fb.coefficient_sums(lambda n: n * n)
    moment_est = base + 0.25 * fb.coefficient_sums(moment_coefficient)
    return FourierFunctionals(
        Estimate(area_est, math.sqrt(g.area / math.pi)),
        Estimate(perim_est, g.perimeter / (2.0 * math.pi)),
        Estimate(moment_est, (2.0 * g.polar_moment / math.pi) ** 0.25),
    )


def area_from_coefficients(fb: FourierBoundary) -> float:
    """|Ω| = π((1+a0)^2 + ½ Σ (a_n^2 + b_n^2)), exact for a finite Fourier boundary."""
    return math.pi * ((1.0 + fb.a0) ** 2 + 0.5 * fb.coefficient_sums())


def ellipse_boundary_expansion(a: float) -> FourierBoundary:
    """Second-order Fourier coefficients of the unit-area ellipse boundary in (a - 1)."""
    d = a - 1.0
    if abs(d) > 0.2:
        raise DomainError("expansion is meant for |a - 1| <= 0.2")
    return FourierBoundary(-0.25 * d * d, (0.0, d - 0.5 * d * d, 0.0, 0.75 * d * d))


def ellipse_polar_radius(a: float, t):
    """Exact polar radius of x^2/a^2 + a^2 y^2 = 1."""
    t = np.asarray(t, dtype=float)
    return 1.0 / np.sqrt(np.cos(t) ** 2 / (a * a) + a * a * np.sin(t) ** 2)
