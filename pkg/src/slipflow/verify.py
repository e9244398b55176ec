"""Inequality sweeps over shapes and slip lengths.

Every check returns a :class:`VerifyReport` holding one signed margin per
sample point (positive = inequality holds). Points where equality is known
to occur are flagged and judged against a tolerance instead of strictly.
Exploratory reports document numerical evidence for open statements and
never count as failures.
"""
from __future__ import annotations

import csv
import io
import json
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from . import disk, ellipse, ngon, rect, tri
from .errors import DomainError, UnavailableError, UnknownIdError
from .geomfn import (Disk, EllipseUnitArea, EquilateralTriangle, Rectangle, RegularPolygon, ShapeSpec,
                     summary)
from .rootkit import erf, gauss_legendre, sine_integral

PASS_TOL = 1e-10
STRICT_TOL = 1e-10
J0 = ellipse.J0_FIRST


# ----------------------------------------------------------------- report


@dataclass(frozen=True)
class SweepGrid:
    betas: tuple
    params: tuple = ()
    area: float = math.pi

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if not self.betas:
            raise DomainError("grid needs at least one slip length")
        if any(not b >= 0 for b in self.betas):
            raise DomainError("slip lengths must be nonnegative")
        if not self.area > 0:
            raise DomainError("area must be positive")

    @classmethod
    def log(cls, lo: float, hi: float, n: int, **kw) -> "SweepGrid":
        return cls(tuple(np.logspace(math.log10(lo), math.log10(hi), n)), **kw)


@dataclass
class VerifyReport:
    id: str
    grid: dict
    labels: list
    margins: list
    equality: list
    exploratory: bool = False
    eq_tol: float = 1e-8
    notes: dict = field(default_factory=dict)

    @property
    def min_margin(self) -> float:
        return min(self.margins) if self.margins else math.inf

    @property
    def worst_point(self) -> str:
        return self.labels[int(np.argmin(self.margins))] if self.margins else ""

    @property
    def zero_margin_loci(self) -> list:
        return [l for l, m, e in zip(self.labels, self.margins, self.equality) if e or abs(m) <= STRICT_TOL]

    @property
    def failures(self) -> list:
        out = []
        for l, m, e in zip(self.labels, self.margins, self.equality):
            if e:
                if abs(m) > self.eq_tol:
                    out.append(l)
            elif not m > STRICT_TOL:
                out.append(l)
        return out

    @property
    def passed(self) -> bool:
        return bool(self.margins) and self.min_margin >= -PASS_TOL and not self.failures

    @property
    def gates(self) -> bool:
        """True when a failure of this report should fail the run."""
        return not self.exploratory

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "exploratory": self.exploratory,
            "grid": {k: [_fmt_num(v) for v in vals] for k, vals in self.grid.items()},
            "labels": list(self.labels),
            "margins": [_fmt_num(m) for m in self.margins],
            "equality": list(self.equality),
            "min_margin": _fmt_num(self.min_margin),
            "worst_point": self.worst_point,
            "zero_margin_loci": self.zero_margin_loci,
            "failures": self.failures,
            "pass": self.passed,
            "notes": {k: (_fmt_num(v) if isinstance(v, float) else v) for k, v in sorted(self.notes.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "point", "margin", "equality_locus", "exploratory"])
        for l, m, e in zip(self.labels, self.margins, self.equality):
            w.writerow([self.id, l, format(m + 0.0, ".12g"), int(e), int(self.exploratory)])
        return buf.getvalue()


def _fmt_num(x: float):
    if isinstance(x, (bool, str)) or x is None:
        return x
    x = float(x)
    if not math.isfinite(x):
        return str(x)
    return float(format(x, ".12g")) + 0.0  # folds -0.0 into 0.0


class _Collector:
    def __init__(self):
        self.labels, self.margins, self.equality = [], [], []

    def add(self, label: str, margin: float, equality: bool = False) -> None:
        self.labels.append(label)
        self.margins.append(float(margin))
        self.equality.append(bool(equality))

    def report(self, rid: str, grid: dict, **kw) -> VerifyReport:
        return VerifyReport(rid, grid, self.labels, self.margins, self.equality, **kw)


def grid_map(fn: Callable, points: Iterable, workers: int = 1) -> list:
    """Apply ``fn`` to independent grid points; results keep the input order."""
    pts = list(points)
    if workers <= 1:
        return [fn(p) for p in pts]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, pts))


# ------------------------------------------------------- shape dispatch


def _tri_half_side(area: float) -> float:
    return math.sqrt(area / math.sqrt(3.0))


def q_steady_of(shape: ShapeSpec, beta: float) -> float:
    """Steady flux (unit pressure gradient) for any supported shape."""
    if isinstance(shape, Disk):
        return disk.q_steady_disk(shape.radius, beta)
    if isinstance(shape, Rectangle):
        return rect.q_steady_rect(shape.a, shape.b, beta)
    if isinstance(shape, EquilateralTriangle):
        return tri.q_steady_tri(shape.a, beta)
    if isinstance(shape, RegularPolygon):
        return ngon.q_steady_ngon(shape.n, beta, shape.area).value
    if isinstance(shape, EllipseUnitArea):
        if beta == 0.0:
            return ellipse.q_steady_ellipse_exact_b0(shape.a)
        return ellipse.q_steady_ellipse_pert(shape.a, beta)
    raise UnavailableError(f"no flux solver for {shape!r}")


def lambda1_of(shape: ShapeSpec, beta: float) -> float:
    """Fundamental slip eigenvalue for any supported shape."""
    if isinstance(shape, Disk):
        return disk.lambda1_disk(shape.radius, beta)
    if isinstance(shape, Rectangle):
        return rect.lambda1_rect(shape.a, shape.b, beta)
    if isinstance(shape, EquilateralTriangle):
        return tri.lambda1_tri(shape.a, beta)
    if isinstance(shape, RegularPolygon):
        return ngon.lambda1_ngon(shape.n, beta, shape.area).value
    if isinstance(shape, EllipseUnitArea):
        return ellipse.lambda1_ellipse_pert(shape.a, beta)
    raise UnavailableError(f"no eigenvalue solver for {shape!r}")


def mode1_weight_of(shape: ShapeSpec, beta: float = 0.0) -> float:
    """Flux weight Q_1 of the fundamental mode."""
    if isinstance(shape, Disk):
        return float(disk.disk_spectrum(shape.radius, beta, 1).weights[0])
    if isinstance(shape, Rectangle):
        return float(rect.rect_spectrum(shape.a, shape.b, beta, 1, 1).weights[0, 0])
    if isinstance(shape, EquilateralTriangle):
        return tri.mode1_weight_tri(shape.a, beta)
    raise UnavailableError(f"no mode weight for {shape!r}")


def fixture_shapes(area: float = math.pi, ngons: Sequence[int] = (3, 4, 6)) -> dict:
    """The standard comparison set at a common area."""
    h = math.sqrt(area) / 2.0
    shapes = {
        "disk": Disk(math.sqrt(area / math.pi)),
        "square": Rectangle(h, h),
        "rect1:4": Rectangle(h / 2.0, 2.0 * h),
        "triangle": EquilateralTriangle(_tri_half_side(area)),
    }
    if area == math.pi:
        shapes["ellipse1.2"] = EllipseUnitArea(1.2)
    for n in ngons:
        shapes[f"ngon{n}"] = RegularPolygon(n, area)
    return shapes


# --------------------------------------------------------- theorems 1, 2


def _theorem_sweep(rid: str, shapes: Mapping[str, ShapeSpec], grid: SweepGrid, fn, sense: int,
                   workers: int = 1) -> VerifyReport:
    col = _Collector()
    pts = [(name, s, b) for name, s in shapes.items() for b in grid.betas]

    def one(p):
        name, s, b = p
        ref = Disk(math.sqrt(summary(s).area / math.pi))
        return sense * (fn(ref, b) - fn(s, b))

    for (name, s, b), m in zip(pts, grid_map(one, pts, workers)):
        col.add(f"{name}|beta={b:.6g}", m, isinstance(s, Disk))
    return col.report(rid, {"beta": list(grid.betas)}, eq_tol=1e-12)


def check_theorem1(shapes: Mapping[str, ShapeSpec], grid: SweepGrid, workers: int = 1) -> VerifyReport:
    """Q_steady(Ω*, β) - Q_steady(Ω, β) at equal area."""
    return _theorem_sweep("theorem1", shapes, grid, q_steady_of, +1, workers)


def check_theorem2(shapes: Mapping[str, ShapeSpec], grid: SweepGrid, workers: int = 1) -> VerifyReport:
    """λ1(Ω, β) - λ1(Ω*, β) at equal area."""
    return _theorem_sweep("theorem2", shapes, grid, lambda1_of, -1, workers)


# ------------------------------------------------------------ theorem 3


def r_grid(n: int = 200, lo: float = 0.05) -> np.ndarray:
    return np.linspace(lo, 1.0, n)


def check_theorem3(h: float, betas: Sequence[float], n_r: int = 200, route_tol: float = 1e-9) -> VerifyReport:
    """Among rectangles (hr) x (h/r) the square minimises λ1, with the supporting routes.

    Point families: ``min`` λ1(r) - λ1(1); ``vb`` variational bound minus λ1;
    ``route`` agreement of the arctan (φ) route with the direct root;
    ``lemma2`` the constraint φ2(X)φ2(Y) = φ2(Z)²; ``logcvx`` the mean of the
    slip-scaled roots exceeding the square's; ``cf`` the no-slip closed form.
    """
    rs = r_grid(n_r)
    col = _Collector()
    for b in betas:
        sq = rect.lambda1_square(h, b)
        for r in rs:
            at1 = r == 1.0
            tag = f"h={h:.6g}|beta={b:.6g}|r={r:.6g}"
            lam = rect.lambda1_rect(h * r, h / r, b)
            col.add("min|" + tag, lam - sq, at1)
            vb = rect.variational_bound(h, r, b)
            col.add("vb|" + tag, (vb - lam) / lam, at1 or b == 0.0)
            if b == 0.0:
                closed = math.pi ** 2 / (4.0 * h * h) * (r * r + 1.0 / (r * r) - 2.0)
                col.add("cf|" + tag, route_tol - abs(lam - sq - closed) / sq)
                continue
            mx = slip_scaled_root(h * r / b)
            my = slip_scaled_root(h / (r * b))
            ms = slip_scaled_root(h / b)
            lam_phi = (mx * mx + my * my) / (b * b)
            col.add("route|" + tag, route_tol - abs(lam_phi - lam) / lam)
            lhs = rect.phi2(mx * mx) * rect.phi2(my * my)
            rhs = rect.phi2(ms * ms) ** 2
            col.add("lemma2|" + tag, route_tol - abs(lhs - rhs) / rhs)
            col.add("logcvx|" + tag, (0.5 * (mx + my) - ms) / ms, at1)
    return col.report(f"theorem3[h={h:.6g}]", {"beta": list(betas), "r": list(rs)}, eq_tol=1e-12)


def slip_scaled_root(v: float) -> float:
    """μ̂ with φ1(μ̂) = v, i.e. the slip-scaled strip root for half-width/β = v."""
    return rect.invert_phi1(v)


def check_rect_bounds(h: float, betas: Sequence[float], n_r: int = 200, tol: float = 1e-9) -> VerifyReport:
    """μ_LB < μ < μ_UB, square minimises λ_LB and λ_UB, and the quartic crossing."""
    rs = r_grid(n_r)
    col = _Collector()
    for b in betas:
        lb1 = rect.lambda_lb(h, 1.0, b)
        ub1 = rect.lambda_ub(h, 1.0, b)
        for r in rs:
            tag = f"h={h:.6g}|beta={b:.6g}|r={r:.6g}"
            for c in (h * r, h / r):
                mu = rect.mu_root(c, b).mu
                bd = rect.mu_bounds(c, b)
                col.add(f"mulb|c={c:.6g}|" + tag, (mu - bd.lb) / mu, b == 0.0)
                col.add(f"muub|c={c:.6g}|" + tag, (bd.ub - mu) / mu, b == 0.0)
            col.add("lbmin|" + tag, (rect.lambda_lb(h, r, b) - lb1) / lb1, r == 1.0)
            col.add("ubmin|" + tag, (rect.lambda_ub(h, r, b) - ub1) / ub1, r == 1.0)
        q = rect.quartic_rstar(h, b, h * h * ub1)
        for side, rv in (("minus", q.r_minus), ("plus", q.r_plus)):
            res = abs(rect.lambda_lb(h, rv, b) - ub1) / ub1
            col.add(f"quartic-{side}|h={h:.6g}|beta={b:.6g}", tol - res)
    return col.report(f"rect-bounds[h={h:.6g}]", {"beta": list(betas), "r": list(rs)}, eq_tol=1e-12)


# ---------------------------------------------------- polygon ordering


def check_polygon_ordering(grid: SweepGrid) -> VerifyReport:
    """Square beats triangle: larger flux and smaller eigenvalue at equal area."""
    h = math.sqrt(grid.area) / 2.0
    at = _tri_half_side(grid.area)
    col = _Collector()
    for b in grid.betas:
        col.add(f"Q|beta={b:.6g}", rect.q_steady_rect(h, h, b) - tri.q_steady_tri(at, b))
        col.add(f"lambda|beta={b:.6g}", tri.lambda1_tri(at, b) - rect.lambda1_square(h, b))
    return col.report("polygon", {"beta": list(grid.betas)}, notes={"area": grid.area})


# ------------------------------------------------- classical no-slip


def classical_shapes() -> dict:
    h = math.sqrt(math.pi) / 2.0
    return {
        "disk": Disk(1.0),
        "square": Rectangle(h, h),
        "rect1:2": Rectangle(h / math.sqrt(2.0), h * math.sqrt(2.0)),
        "triangle": EquilateralTriangle(_tri_half_side(math.pi)),
        "ellipse1.3": EllipseUnitArea(1.3),
    }


def _lambda_b0(shape: ShapeSpec) -> float:
    if isinstance(shape, EllipseUnitArea):
        return ellipse.lambda1_ellipse_mps(shape.a, 0.0)
    return lambda1_of(shape, 0.0)


def tan_inequality_margins(n: int = 1000) -> tuple:
    """Relative margins of 8x/(π² - 4x²) < tan x < xπ²/(π² - 4x²) on (0, π/2)."""
    x = 0.5 * math.pi * np.arange(1, n + 1) / (n + 1)
    t = np.tan(x)
    d = math.pi ** 2 - 4.0 * x * x
    return x, (t - 8.0 * x / d) / t, (x * math.pi ** 2 / d - t) / t


def check_classical_b0(shapes: Mapping[str, ShapeSpec] | None = None) -> VerifyReport:
    """No-slip inequalities, as relative margins.

    Kohler-Jobin Qλ² ≥ (π/8)j⁴; Payne-Rayner Q_1 ≥ 4π/λ²; Q_1 ≤ 4B/λ²;
    Nicolai Q ≤ I_max I_min/I_c ≤ I_c/4; B bounds Q ≥ |Ω|²/(4B) and
    λ ≤ j²B/(2|Ω|); the chain (|Ω|/π)² ≤ 2I_c/π ≤ (|∂Ω|/2π)⁴; the tan bounds.
    """
    shapes = classical_shapes() if shapes is None else shapes
    col = _Collector()
    for name, s in shapes.items():
        g = summary(s)
        is_disk = isinstance(s, Disk)
        is_ell = isinstance(s, EllipseUnitArea)
        q = q_steady_of(s, 0.0)
        lam = _lambda_b0(s)
        kj = math.pi / 8.0 * J0 ** 4
        col.add(f"kohler-jobin|{name}", q * lam * lam / kj - 1.0, is_disk)
        try:
            q1 = mode1_weight_of(s, 0.0)
        except UnavailableError:
            q1 = None
        if q1 is not None:
            col.add(f"payne-rayner|{name}", q1 * lam * lam / (4.0 * math.pi) - 1.0, is_disk)
            col.add(f"q1-b-upper|{name}", 1.0 - q1 * lam * lam / (4.0 * g.b_functional))
        nic = g.i_max * g.i_min / (g.i_max + g.i_min)
        col.add(f"nicolai|{name}", 1.0 - q / nic, is_ell or is_disk)
        isotropic = abs(g.i_max - g.i_min) <= 1e-12 * g.i_max
        col.add(f"nicolai-ic|{name}", 1.0 - 4.0 * nic / g.polar_moment, isotropic)
        col.add(f"b-flux|{name}", q * 4.0 * g.b_functional / g.area ** 2 - 1.0, is_ell or is_disk)
        col.add(f"b-lambda|{name}", J0 ** 2 * g.b_functional / (2.0 * g.area * lam) - 1.0, is_disk)
        ic = 2.0 * g.polar_moment / math.pi
        col.add(f"area-moment|{name}", ic / (g.area / math.pi) ** 2 - 1.0, is_disk)
        col.add(f"moment-perimeter|{name}", (g.perimeter / (2.0 * math.pi)) ** 4 / ic - 1.0, is_disk)
    x, lo, hi = tan_inequality_margins()
    for xi, a, b in zip(x, lo, hi):
        col.add(f"tan-lower|x={xi:.6g}", a)
        col.add(f"tan-upper|x={xi:.6g}", b)
    return col.report("classical", {"shape": list(shapes)}, eq_tol=1e-6)


# ------------------------------------------------------ deficit bound


def payne_deficit_bound(area: float, psi: float) -> float:
    """(|Ω|²/8π)(1 - 2Ψ²/(1 - Ψ²) - 4Ψ⁴ log Ψ/(1 - Ψ²)²)."""
    if not 0.0 <= psi < 1.0:
        raise DomainError("Ψ must lie in [0, 1)")
    base = area * area / (8.0 * math.pi)
    if psi == 0.0:
        return base
    p2 = psi * psi
    return base * (1.0 - 2.0 * p2 / (1.0 - p2) - 4.0 * p2 * p2 * math.log(psi) / (1.0 - p2) ** 2)


def deficit_psi(shape: ShapeSpec, squared: bool = True) -> float:
    """Ψ from the isoperimetric deficit; ``squared`` means Ψ² = 1 - 4π|Ω|/|∂Ω|²."""
    g = summary(shape)
    d = max(0.0, 1.0 - 4.0 * math.pi * g.area / g.perimeter ** 2)
    return math.sqrt(d) if squared else d


def deficit_shapes() -> dict:
    out = dict(classical_shapes())
    out["ellipse1.05"] = EllipseUnitArea(1.05)
    out["ellipse2"] = EllipseUnitArea(2.0)
    return out


def check_deficit_bound(shapes: Mapping[str, ShapeSpec] | None = None, squared: bool = True) -> VerifyReport:
    """Q_steady ≥ Payne's deficit bound at β = 0 (relative margin).

    With ``squared=False`` Ψ is taken as the deficit itself; that reading is
    violated by every non-circular fixture and is reported as exploratory.
    """
    shapes = deficit_shapes() if shapes is None else shapes
    col = _Collector()
    for name, s in shapes.items():
        q = q_steady_of(s, 0.0)
        psi = deficit_psi(s, squared)
        bound = payne_deficit_bound(summary(s).area, psi)
        col.add(f"{name}|psi={psi:.6g}", q / bound - 1.0 if bound > 0 else 1.0, isinstance(s, Disk))
    rid = "deficit" if squared else "deficit-literal"
    return col.report(rid, {"shape": list(shapes)}, exploratory=not squared, eq_tol=1e-12)


# -------------------------------------------------- complete monotonicity


def kernel_k(r: float, t):
    t = np.asarray(t, dtype=float)
    return np.exp(-r * t) + np.exp(-t / r) - 2.0 * np.exp(-t)


def kernel_root(r: float) -> float:
    from .rootkit import Bracket, solve_bracketed

    return solve_bracketed(lambda t: float(kernel_k(r, t)), Bracket(0.5, 1.0))


def phi1_laplace(z: float) -> float:
    """∫_0^∞ e^{-zt} Si(t) dt by composite Gauss-Legendre."""
    si = np.vectorize(sine_integral)
    top = 60.0 / z
    return gauss_legendre(lambda t: np.exp(-z * t) * si(t), 0.0, top, panels=96)


def phi2_laplace(z: float) -> float:
    """∫_0^∞ e^{-zt} ½√(π/t) erf(√t) dt, with t = s² to remove the endpoint root."""
    er = np.vectorize(erf)
    top = math.sqrt(60.0 / z)
    return gauss_legendre(lambda s: np.exp(-z * s * s) * math.sqrt(math.pi) * er(s), 0.0, top, panels=96)


def fd_derivative(f: Callable, z: float, k: int, h: float) -> float:
    """k-th derivative (k <= 4) by central differences of order h⁴."""
    stencils = {
        0: ([0], [1.0]),
        1: ([-2, -1, 1, 2], [1 / 12, -2 / 3, 2 / 3, -1 / 12]),
        2: ([-2, -1, 0, 1, 2], [-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12]),
        3: ([-3, -2, -1, 1, 2, 3], [1 / 8, -1, 13 / 8, -13 / 8, 1, -1 / 8]),
        4: ([-3, -2, -1, 0, 1, 2, 3], [-1 / 6, 2, -13 / 2, 28 / 3, -13 / 2, 2, -1 / 6]),
    }
    offs, w = stencils[k]
    return sum(c * f(z + o * h) for o, c in zip(offs, w)) / h ** k


def lc1_margin(f: Callable, a: float, b: float, c: float) -> float:
    """(c-b) log f(a) + (b-a) log f(c) - (c-a) log f(b), nonnegative for log-convex f."""
    return (c - b) * math.log(f(a)) + (b - a) * math.log(f(c)) - (c - a) * math.log(f(b))


def lemma2_minimiser(z: float) -> tuple:
    """Minimise X + Y subject to ζ(X) + ζ(Y) = 2ζ(Z) with ζ = log φ2."""
    zeta = lambda x: math.log(rect.phi2(x))
    target = 2.0 * zeta(z)

    def y_of(x):
        v = math.exp(target - zeta(x))
        m = rect.invert_phi1(v)
        return m * m

    res = minimize_scalar(lambda x: x + y_of(x), bounds=(z / 8.0, z * 8.0), method="bounded",
                          options={"xatol": 1e-12 * z})
    return float(res.x), y_of(float(res.x))


def check_compmon(rs: Sequence[float] = tuple(round(0.1 * k, 1) for k in range(1, 10)),
                  zs: Sequence[float] = (0.5, 1.0, 2.0, 5.0), tol: float = 1e-6) -> VerifyReport:
    col = _Collector()
    t_lo = np.linspace(1e-4, 0.5, 400)[:-1]
    t_hi = np.linspace(1.0, 60.0, 400)[1:]
    for r in rs:
        col.add(f"k-negative|r={r:.3g}", -float(np.max(kernel_k(r, t_lo) / t_lo)))
        col.add(f"k-positive|r={r:.3g}", float(np.min(kernel_k(r, t_hi) * np.exp(t_hi * min(r, 1.0 / r)))))
        t0 = kernel_root(r)
        col.add(f"t0-in-interval|r={r:.3g}", min(t0 - 0.5, 1.0 - t0))
    for z in zs:
        col.add(f"laplace-phi1|z={z:.3g}", tol - abs(phi1_laplace(z) - rect.phi1(z)) / rect.phi1(z))
        col.add(f"laplace-phi2|z={z:.3g}", tol - abs(phi2_laplace(z) - rect.phi2(z)) / rect.phi2(z))
    for name, f in (("phi1", rect.phi1), ("phi2", rect.phi2)):
        for z in (0.3, 0.7, 1.5, 3.0, 6.0):
            for k in range(5):
                d = fd_derivative(f, z, k, 0.02 * z)
                col.add(f"cm-{name}|k={k}|z={z:.3g}", (-1) ** k * d)
    for name, f in (("phi1", rect.phi1), ("phi2", rect.phi2)):
        for a, b, c in ((0.2, 0.5, 1.0), (0.5, 1.0, 4.0), (1.0, 2.0, 3.0), (0.1, 3.0, 9.0)):
            col.add(f"lc1-{name}|{a:g},{b:g},{c:g}", lc1_margin(f, a, b, c))
    for z in (0.5, 1.0, 3.0):
        x, y = lemma2_minimiser(z)
        col.add(f"lemma2|Z={z:g}", tol - max(abs(x - z), abs(y - z)) / z)
    return col.report("compmon", {"r": list(rs), "z": list(zs)})


def check_mu_compmon(beta: float = 1.0, cs: Sequence[float] = (0.3, 0.6, 1.0, 2.0, 4.0)) -> VerifyReport:
    """Alternating derivative signs and log-convexity of c -> μ(c) (open question)."""
    f = lambda c: rect.mu_root(c, beta).mu
    col = _Collector()
    for c in cs:
        for k in range(5):
            col.add(f"cm-mu|k={k}|c={c:.3g}", (-1) ** k * fd_derivative(f, c, k, 0.02 * c))
    for r in (0.2, 0.5, 0.8):
        col.add(f"lc1-mu|r={r:g}", lc1_margin(f, r, 1.0, 1.0 / r))
    return col.report("compmon-mu", {"c": list(cs)}, exploratory=True, notes={"beta": beta})


# ------------------------------------------------------- conjectures


def check_qsteady_beta_conjecture(shapes: Mapping[str, ShapeSpec] | None = None,
                                  beta_max: float = 1e3, n: int = 13) -> VerifyReport:
    """Relative flux gap (Q* - Q)/Q* along β; exploratory.

    The closed forms give the limit 1 - |∂Ω*|/|∂Ω| as β grows, recorded in
    the notes next to the last computed gap.
    """
    if beta_max < 1e3:
        raise DomainError("beta_max must be at least 1e3")
    if shapes is None:
        h = math.sqrt(math.pi) / 2.0
        shapes = {"disk": Disk(1.0), "square": Rectangle(h, h),
                  "triangle": EquilateralTriangle(_tri_half_side(math.pi))}
    betas = np.logspace(0.0, math.log10(beta_max), n)
    col = _Collector()
    notes = {}
    for name, s in shapes.items():
        g = summary(s)
        ref = Disk(math.sqrt(g.area / math.pi))
        gaps = [1.0 - q_steady_of(s, b) / q_steady_of(ref, b) for b in betas]
        for b, gap in zip(betas, gaps):
            # margin > 0 when the gap has shrunk relative to β = 1
            col.add(f"{name}|beta={b:.6g}", gaps[0] - gap if b > 1.0 else 0.0, isinstance(s, Disk) or b == 1.0)
        notes[f"{name}.gap_last"] = float(gaps[-1])
        notes[f"{name}.gap_limit"] = 1.0 - 2.0 * math.pi * ref.radius / g.perimeter
    return col.report("conjecture-qsteady", {"beta": list(betas)}, exploratory=True, notes=notes)


def check_ngon_lambda_monotone(betas: Sequence[float] = (0.0, 0.1, 1.0, 10.0),
                               ns: Sequence[int] = (3, 4, 5, 6)) -> VerifyReport:
    """λ1 of the regular n-gon exceeds that of the (n+1)-gon at equal area; exploratory."""
    col = _Collector()
    for b in betas:
        vals = [ngon.lambda1_ngon(n, b).value for n in ns]
        for n, l0, l1 in zip(ns, vals, vals[1:]):
            col.add(f"n={n}|beta={b:.6g}", l0 - l1)
    return col.report("conjecture-ngon", {"beta": list(betas), "n": list(ns)}, exploratory=True)


def check_lambda_beta_limit(beta: float = 1e3, tol: float = 0.01) -> VerifyReport:
    """βλ1 approaches |∂Ω|/|Ω| for large β."""
    h = math.sqrt(math.pi) / 2.0
    shapes = {"disk": Disk(1.0), "square": Rectangle(h, h), "triangle": EquilateralTriangle(_tri_half_side(math.pi)),
              "rect1:2": Rectangle(h / math.sqrt(2.0), h * math.sqrt(2.0))}
    col = _Collector()
    for name, s in shapes.items():
        g = summary(s)
        rel = abs(beta * lambda1_of(s, beta) / (g.perimeter / g.area) - 1.0)
        col.add(f"{name}|beta={beta:.6g}", tol - rel)
    return col.report("lambda-beta-limit", {"beta": [beta]})


# ------------------------------------------------------------- suites


THEOREM_GRID = SweepGrid.log(1e-3, 1e3, 20)
THEOREM3_BETAS = (0.01, 0.1, 1.0, 10.0)
THEOREM3_H = (0.5, 1.0, 2.0)


def _suite_theorem1():
    return [check_theorem1(fixture_shapes(), THEOREM_GRID)]


def _suite_theorem2():
    return [check_theorem2(fixture_shapes(), THEOREM_GRID)]


def _suite_theorem3():
    out = [check_theorem3(h, THEOREM3_BETAS) for h in THEOREM3_H]
    out.append(check_theorem3(math.sqrt(math.pi) / 2.0, (0.0, 1.0), n_r=50))
    out.extend(check_rect_bounds(h, THEOREM3_BETAS) for h in THEOREM3_H)
    return out


def _suite_polygon():
    return [check_polygon_ordering(SweepGrid((0.0, 0.01, 0.1, 1.0, 10.0, 100.0, 1e3), area=math.sqrt(3.0))),
            check_lambda_beta_limit()]


def _suite_classical():
    return [check_classical_b0()]


def _suite_deficit():
    return [check_deficit_bound(), check_deficit_bound(squared=False)]


def _suite_compmon():
    return [check_compmon(), check_mu_compmon()]


def _suite_conjecture():
    return [check_qsteady_beta_conjecture(), check_ngon_lambda_monotone()]


SUITES = {
    "theorem1": _suite_theorem1,
    "theorem2": _suite_theorem2,
    "theorem3": _suite_theorem3,
    "polygon": _suite_polygon,
    "classical": _suite_classical,
    "deficit": _suite_deficit,
    "compmon": _suite_compmon,
    "conjecture": _suite_conjecture,
}


def run_suite(name: str) -> list:
    """Reports of one named suite, or of every suite for ``all``."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key))
        return out
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownIdError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}") from None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ellipse.PerturbationRegimeWarning)
        return fn()


def suite_passed(reports: Sequence[VerifyReport]) -> bool:
    return all(r.passed for r in reports if r.gates)
