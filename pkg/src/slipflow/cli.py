"""Command-line front end: single values, figure sweeps, tables and verification.

Every numeric output is printed with at most 12 significant digits so that
repeated runs are byte-identical. Exit status: 0 success, 1 a verification
or figure self-check failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import disk, ellipse, rect, tri, verify
from .errors import DomainError, SlipflowError, UnavailableError, UnknownIdError
from .geomfn import (Disk, EllipseUnitArea, EquilateralTriangle, FourierBoundary, Rectangle, RegularPolygon,
                     moment_coefficient, polygon_table_row, summary)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Locale-free text for a number, at most 12 significant digits."""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0.0:
        return "0.0"  # no signed zeros in output
    s = repr(x)
    digits = s.split("e")[0].replace("-", "").replace(".", "").lstrip("0")
    if len(digits) <= 12:
        return s
    return format(x, ".12g")


# ----------------------------------------------------------- tabular data


@dataclass
class Table:
    columns: list
    rows: list
    comments: list = field(default_factory=list)
    title: str = ""

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows], dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        for c in self.comments:
            buf.write(f"# {c}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([fmt(v) for v in r])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"title": self.title, "comments": self.comments, "columns": self.columns,
                           "rows": [[fmt(v) for v in r] for r in self.rows]}, indent=1, sort_keys=True)

    def to_svg(self, x: str | None = None, ys: Sequence[str] | None = None, width: int = 640,
               height: int = 400) -> str:
        """Minimal line plot: one polyline per y column against the x column."""
        x = x or self.columns[0]
        ys = list(ys or [c for c in self.columns if c != x])
        xv = self.column(x)
        yv = [self.column(c) for c in ys]
        finite = np.concatenate([v[np.isfinite(v)] for v in yv])
        x0, x1 = float(np.min(xv)), float(np.max(xv))
        y0, y1 = float(np.min(finite)), float(np.max(finite))
        if x1 == x0:
            x1 = x0 + 1.0
        if y1 == y0:
            y1 = y0 + 1.0
        pad = 40
        sx = lambda v: pad + (v - x0) / (x1 - x0) * (width - 2 * pad)
        sy = lambda v: height - pad - (v - y0) / (y1 - y0) * (height - 2 * pad)
        colours = ["#c0392b", "#2c6fbb", "#27ae60", "#8e44ad", "#d68910", "#555555"]
        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
               f'viewBox="0 0 {width} {height}">',
               f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
               f'<text x="{pad}" y="20" font-size="13" font-family="sans-serif">{_esc(self.title)}</text>',
               f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
               f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
               f'<text x="{pad}" y="{height - 12}" font-size="11" font-family="sans-serif">'
               f'{_esc(x)}: {fmt(x0)} .. {fmt(x1)}; y: {fmt(y0)} .. {fmt(y1)}</text>']
        for k, (name, v) in enumerate(zip(ys, yv)):
            ok = np.isfinite(v)
            pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(xv[ok], v[ok]))
            col = colours[k % len(colours)]
            out.append(f'<polyline fill="none" stroke="{col}" stroke-width="1.5" points="{pts}"/>')
            out.append(f'<text x="{width - pad - 150}" y="{pad + 14 * k}" font-size="11" fill="{col}" '
                       f'font-family="sans-serif">{_esc(name)}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


# ------------------------------------------------------------- figures


@dataclass
class Figure:
    table: Table
    claim: str
    check: Callable[[Table], bool]
    x: str
    ys: list


def parse_grid(spec: str) -> np.ndarray:
    """``start:stop:n`` with optional ``:log`` or ``:lin`` (default lin)."""
    parts = spec.split(":")
    if len(parts) not in (3, 4):
        raise UsageError(f"grid {spec!r} must look like start:stop:n or start:stop:n:log")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"grid {spec!r} has a non-numeric field") from None
    kind = parts[3] if len(parts) == 4 else "lin"
    if n < 1 or not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise UsageError(f"grid {spec!r} needs finite start <= stop and n >= 1")
    if kind == "log":
        if lo <= 0:
            raise UsageError("log grids need a positive start")
        return np.logspace(math.log10(lo), math.log10(hi), n)
    if kind != "lin":
        raise UsageError(f"grid spacing must be lin or log, got {kind!r}")
    return np.linspace(lo, hi, n)


BETA_FIG = np.logspace(-3.0, 3.0, 61)


def _ratio_figure(title, shape_fn, area, fn, sense, label, claim_word, comment):
    ref = Disk(math.sqrt(area / math.pi))
    s = shape_fn(area)
    rows = [[b, fn(s, b) / fn(ref, b)] for b in BETA_FIG]
    t = Table(["beta", label], rows, [comment, f"area {fmt(area)}"], title)
    check = (lambda tb: bool(np.all(tb.column(label) < 1.0))) if sense < 0 else \
        (lambda tb: bool(np.all(tb.column(label) > 1.0)))
    return Figure(t, f"{label} {claim_word} 1 for every beta", check, "beta", [label])


def _tri_of_area(area):
    return EquilateralTriangle(math.sqrt(area / math.sqrt(3.0)))


def _square_of_area(area):
    h = math.sqrt(area) / 2.0
    return Rectangle(h, h)


def fig_lambda_beta_disk() -> Figure:
    ks = np.concatenate(([0.0], np.logspace(-3.0, 3.0, 61)))
    rows = [[k, disk.lambda1_disk(1.0, k)] for k in ks]
    t = Table(["beta_over_a", "gamma1_sq"], rows, ["a^2 lambda1 = gamma1^2 of the disk against beta/a"],
              "disk: gamma1^2 against beta/a")

    def check(tb):
        g = tb.column("gamma1_sq")
        return bool(np.all(np.diff(g) < 0) and abs(g[0] - ellipse.J0_FIRST ** 2) < 1e-12)

    return Figure(t, "gamma1^2 decreases in beta/a and equals j^2 at 0", check, "beta_over_a", ["gamma1_sq"])


def fig_tri_q_ratio() -> Figure:
    return _ratio_figure("triangle/disk steady flux, area pi", _tri_of_area, math.pi, verify.q_steady_of, -1,
                         "q_ratio", "below", "Q_steady(triangle)/Q_steady(disk) at equal area")


def fig_tri_lambda_ratio() -> Figure:
    return _ratio_figure("triangle/disk lambda1, area sqrt3", _tri_of_area, math.sqrt(3.0), verify.lambda1_of, 1,
                         "lambda_ratio", "above", "lambda1(triangle)/lambda1(disk) at equal area")


def fig_square_q_ratio() -> Figure:
    return _ratio_figure("square/disk steady flux, area pi", _square_of_area, math.pi, verify.q_steady_of, -1,
                         "q_ratio", "below", "Q_steady(square)/Q_steady(disk) at equal area")


def fig_square_lambda_ratio() -> Figure:
    return _ratio_figure("square/disk lambda1, area pi", _square_of_area, math.pi, verify.lambda1_of, 1,
                         "lambda_ratio", "above", "lambda1(square)/lambda1(disk) at equal area")


def fig_zerocs() -> Figure:
    ts = np.linspace(0.0, 1.5, 61)
    h = math.sqrt(math.pi) / 2.0
    qd = disk.q_transient_disk(1.0, 0.0, 1.0, ts)
    qs = rect.q_transient_rect(h, h, 0.0, 1.0, ts)
    qd_inf = disk.q_steady_disk(1.0, 0.0)
    qs_inf = rect.q_steady_rect(h, h, 0.0)
    rows = [[t, a, b, a / qd_inf, b / qs_inf] for t, a, b in zip(ts, qd, qs)]
    tb = Table(["t", "q_disk", "q_square", "qn_disk", "qn_square"], rows,
               ["starting flow, no slip: unit disk and square of side sqrt(pi)",
                "qn = Q(t)/Q(inf)"], "starting flow Q(t), disk and square")

    def check(t):
        later = t.column("t") > 0
        return bool(qd_inf > qs_inf and np.all(t.column("qn_disk")[later] < t.column("qn_square")[later]))

    return Figure(tb, "disk Q(inf) exceeds the square's and its normalised curve rises more slowly", check, "t",
                  ["q_disk", "q_square", "qn_disk", "qn_square"])


RECT_FIG_BETA = 1.0


def _rect_family(area: float = math.pi):
    # |Ω|/(4a²) = b/a runs over [1/16, 16] symmetrically in log scale
    xs = np.logspace(-math.log10(16.0), math.log10(16.0), 81)
    for x in xs:
        a = math.sqrt(area / (4.0 * x))
        yield x, a, area / (4.0 * a)


def fig_rect_q() -> Figure:
    area = math.pi
    rows = [[x, math.log(x), rect.q_steady_rect(a, b, RECT_FIG_BETA) / area ** 2] for x, a, b in _rect_family(area)]
    tb = Table(["aspect", "log_aspect", "q_over_area_sq"], rows,
               [f"rectangles of area pi, beta {fmt(RECT_FIG_BETA)}", "aspect = |Omega|/(4a^2) = b/a"],
               "rectangles: Q_steady/|Omega|^2")

    def check(t):
        return int(np.argmax(t.column("q_over_area_sq"))) == len(t.rows) // 2

    return Figure(tb, "Q_steady is largest at the square", check, "log_aspect", ["q_over_area_sq"])


def fig_rect_lambda() -> Figure:
    area = math.pi
    rows = [[x, math.log(x), area * rect.lambda1_rect(a, b, RECT_FIG_BETA)] for x, a, b in _rect_family(area)]
    tb = Table(["aspect", "log_aspect", "area_lambda1"], rows,
               [f"rectangles of area pi, beta {fmt(RECT_FIG_BETA)}", "aspect = |Omega|/(4a^2) = b/a"],
               "rectangles: |Omega| lambda1")

    def check(t):
        return int(np.argmin(t.column("area_lambda1"))) == len(t.rows) // 2

    return Figure(tb, "lambda1 is smallest at the square", check, "log_aspect", ["area_lambda1"])


def fig_tri_square_lambda() -> Figure:
    area = math.sqrt(3.0)
    at = _tri_of_area(area).a
    h = math.sqrt(area) / 2.0
    betas = np.concatenate(([0.0], np.logspace(-2.0, 1.0, 40)))
    rows = [[b, tri.lambda1_tri(at, b), rect.lambda1_square(h, b)] for b in betas]
    tb = Table(["beta", "lambda1_triangle", "lambda1_square"], rows, ["both areas sqrt(3)"],
               "lambda1 of triangle and square, area sqrt3")

    def check(t):
        lt, ls = t.column("lambda1_triangle"), t.column("lambda1_square")
        return bool(np.all(np.diff(lt) < 0) and np.all(np.diff(ls) < 0) and np.all(lt > ls))

    return Figure(tb, "both curves decrease and the triangle stays above the square", check, "beta",
                  ["lambda1_triangle", "lambda1_square"])


def fig_logcvx_b() -> Figure:
    grid = np.linspace(0.1, 3.0, 30)
    rows = []
    for x in grid:
        for y in grid:
            v = math.sqrt(rect.phi1(x) * rect.phi1(y)) - rect.phi1(math.sqrt(0.5 * (x * x + y * y)))
            rows.append([x, y, v])
    tb = Table(["mu_x", "mu_y", "gap"], rows,
               ["gap = sqrt(phi1(X) phi1(Y)) - phi1(sqrt((X^2+Y^2)/2)), phi1(z) = arctan(1/z)/z"],
               "log-convexity gap")

    def check(t):
        x, y, g = t.column("mu_x"), t.column("mu_y"), t.column("gap")
        diag = x == y
        return bool(np.all(np.abs(g[diag]) < 1e-15) and np.all(g[~diag] > 0))

    return Figure(tb, "gap is positive off the diagonal and zero on it", check, "mu_x", ["gap"])


def fig_rect_lbub() -> Figure:
    h, b = 1.0, 1.0
    rs = np.linspace(0.2, 1.0, 81)
    rows = [[r, rect.lambda_lb(h, r, b), rect.lambda_ub(h, r, b), rect.lambda1_rect(h * r, h / r, b)] for r in rs]
    tb = Table(["r", "lambda_lb", "lambda_ub", "lambda1"], rows,
               ["beta 1, h 1: rectangles (hr) x (h/r), area 4"], "lambda bounds against r")

    def check(t):
        last = len(t.rows) - 1
        return all(int(np.argmin(t.column(c))) == last for c in ("lambda_lb", "lambda_ub", "lambda1")) and \
            bool(np.all(t.column("lambda_lb") < t.column("lambda1"))) and \
            bool(np.all(t.column("lambda1") < t.column("lambda_ub")))

    return Figure(tb, "both bounds and lambda1 are smallest at r = 1", check, "r", ["lambda_lb", "lambda_ub", "lambda1"])


FIGURES = {
    "lambda-beta-disk": fig_lambda_beta_disk,
    "tri-q-ratio": fig_tri_q_ratio,
    "tri-lambda-ratio": fig_tri_lambda_ratio,
    "square-q-ratio": fig_square_q_ratio,
    "square-lambda-ratio": fig_square_lambda_ratio,
    "zerocs": fig_zerocs,
    "rect-q": fig_rect_q,
    "rect-lambda": fig_rect_lambda,
    "tri-square-lambda": fig_tri_square_lambda,
    "logcvx-b": fig_logcvx_b,
    "rect-lbub": fig_rect_lbub,
}


def build_figure(fid: str) -> Figure:
    try:
        fn = FIGURES[fid]
    except KeyError:
        raise UnknownIdError(f"unknown figure {fid!r}; choose from {', '.join(FIGURES)}") from None
    return fn()


# -------------------------------------------------------------- tables


def table_polygon_deficits() -> Table:
    rows = []
    for n in (3, 4, 6):
        r = polygon_table_row(n)
        rows.append([n, r["two_alpha"], r["deficit_ratio"], r["moment_excess"], r["asymmetry_bound"]])
    return Table(["n", "two_alpha", "deficit_ratio", "moment_excess", "asymmetry_bound"], rows,
                 ["regular n-gons; two_alpha is a tabulated fixture, the rest are computed",
                  "deficit_ratio = |dOmega|^2/(4 pi |Omega|) - 1",
                  "moment_excess = sqrt(2 pi I_c)/|Omega| - 1",
                  "asymmetry_bound = sqrt(1 + 2 alpha^2) - 1"], "regular polygon deficits")


def table_rn(n_max: int = 6) -> Table:
    rows = []
    for n in range(1, n_max + 1):
        rows.append([n, 1, n * n, int(moment_coefficient(n)), 1 if n == 1 else -2 * n + 3,
                     ellipse.rayleigh_coefficient(n)])
    return Table(["n", "area_radius", "perimeter", "moment_radius", "q_steady_radius", "rayleigh_c"], rows,
                 ["second-order coefficients for r = 1 + a0 + sum (a_n cos nt + b_n sin nt)",
                  "geometric columns R(n): quantity = 1 + a0 + 1/4 sum R(n)(a_n^2 + b_n^2)",
                  "rayleigh_c: j/sqrt(lambda1) = 1 + a0 - 1/4 sum c_n (a_n^2 + b_n^2), no slip"],
                 "near-circular coefficients")


TABLES = {"polygon-deficits": table_polygon_deficits, "rn-table": table_rn}


def build_table(tid: str) -> Table:
    try:
        fn = TABLES[tid]
    except KeyError:
        raise UnknownIdError(f"unknown table {tid!r}; choose from {', '.join(TABLES)}") from None
    return fn()


# --------------------------------------------------------------- shapes


def shape_from_args(ns) -> object:
    kind = ns.shape
    area = ns.area
    if kind == "disk":
        if ns.radius is not None:
            return Disk(ns.radius)
        return Disk(math.sqrt((area or math.pi) / math.pi))
    if kind == "rect":
        if ns.a is not None and ns.b is not None:
            return Rectangle(ns.a, ns.b)
        return Rectangle.with_area(area or math.pi, ns.aspect)
    if kind == "tri":
        if ns.a is not None:
            return EquilateralTriangle(ns.a)
        return EquilateralTriangle.with_area(area or math.pi)
    if kind == "ngon":
        if ns.n is None:
            raise UsageError("--shape ngon needs --n")
        return RegularPolygon(ns.n, area or math.pi)
    if kind == "ellipse":
        if area not in (None, math.pi):
            raise UsageError("ellipses are handled at area pi only")
        return EllipseUnitArea(ns.axis if ns.axis is not None else 1.0)
    if kind == "fourier":
        return FourierBoundary(ns.a0, _floats(ns.an), _floats(ns.bn))
    raise UsageError(f"unknown shape {kind!r}")


def _floats(s: str | None) -> tuple:
    if not s:
        return ()
    try:
        return tuple(float(v) for v in s.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {s!r}") from None


def compute_rows(shape, beta: float, dp: float, functionals: Sequence[str]) -> list:
    g = summary(shape)
    rows = []
    for f in functionals:
        if f == "q_steady":
            if isinstance(shape, FourierBoundary):
                raise UnavailableError("steady flux is not solved for general Fourier boundaries")
            rows.append(["q_steady", dp * verify.q_steady_of(shape, beta)])
        elif f == "lambda1":
            if isinstance(shape, FourierBoundary):
                if beta != 0.0:
                    raise UnavailableError("Fourier boundaries have only the no-slip second-order eigenvalue")
                rows.append(["lambda1", ellipse.rayleigh_lambda_b0(shape)])
            elif isinstance(shape, EllipseUnitArea):
                rows.append(["lambda1", ellipse.lambda1_ellipse_mps(shape.a, beta)])
                rows.append(["lambda1_perturbative", ellipse.lambda1_ellipse_pert(shape.a, beta)])
            else:
                rows.append(["lambda1", verify.lambda1_of(shape, beta)])
        elif f == "geometry":
            rows += [["area", g.area], ["perimeter", g.perimeter], ["polar_moment", g.polar_moment]]
            if g.b_functional is not None:
                rows.append(["b_functional", g.b_functional])
        else:
            raise UsageError(f"unknown functional {f!r}; use q_steady, lambda1, geometry")
    return rows


# ----------------------------------------------------------- commands


def _emit(text: str, out_path: str | None, stdout) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _render(tb: Table, fmt_name: str, x=None, ys=None) -> str:
    if fmt_name == "json":
        return tb.to_json() + "\n"
    if fmt_name == "svg":
        return tb.to_svg(x, ys)
    return tb.to_csv()


def cmd_compute(ns, stdout) -> int:
    shape = shape_from_args(ns)
    funcs = [f.strip() for f in ns.functionals.split(",") if f.strip()]
    tb = Table(["quantity", "value"], compute_rows(shape, ns.beta, ns.dp, funcs),
               [f"shape {ns.shape}, beta {fmt(ns.beta)}, dp {fmt(ns.dp)}"], "compute")
    _emit(_render(tb, ns.format), ns.out, stdout)
    return EXIT_OK


def cmd_transient(ns, stdout) -> int:
    ts = parse_grid(ns.t_grid)
    if np.any(ts < 0):
        raise UsageError("times must be nonnegative")
    shape = shape_from_args(ns)
    if isinstance(shape, Disk):
        q = disk.q_transient_disk(shape.radius, ns.beta, ns.dp, ts, n_modes=ns.modes)
        qinf = disk.q_steady_disk(shape.radius, ns.beta, ns.dp)
    elif isinstance(shape, Rectangle):
        q = rect.q_transient_rect(shape.a, shape.b, ns.beta, ns.dp, ts, n_x=ns.modes, n_y=ns.modes)
        qinf = rect.q_steady_rect(shape.a, shape.b, ns.beta, ns.dp)
    else:
        raise UsageError("transient flux is available for --shape disk and --shape rect")
    tb = Table(["t", "q", "q_normalised"], [[t, v, v / qinf] for t, v in zip(ts, q)],
               [f"starting flow, shape {ns.shape}, beta {fmt(ns.beta)}, modes {ns.modes}"], "starting flow")
    _emit(_render(tb, ns.format, "t", ["q_normalised"]), ns.out, stdout)
    return EXIT_OK


def cmd_periodic(ns, stdout) -> int:
    if ns.shape != "disk":
        raise UsageError("periodic flux is available for --shape disk only")
    shape = shape_from_args(ns)
    omegas = parse_grid(ns.omega_grid) if ns.omega_grid else np.array([ns.omega])
    rows = []
    for w in omegas:
        q = disk.q_periodic_disk(shape.radius, ns.beta, float(w), ns.dp)
        rows.append([w, q.real, q.imag, abs(q), cmath.phase(q)])
    tb = Table(["omega", "q_re", "q_im", "q_abs", "phase"], rows,
               [f"pulsatile flow in the disk radius {fmt(shape.radius)}, beta {fmt(ns.beta)}",
                "Q(t) = Re(q exp(i omega t)) for the pressure gradient dp cos(omega t)"], "periodic flux")
    _emit(_render(tb, ns.format, "omega", ["q_abs"]), ns.out, stdout)
    return EXIT_OK


def cmd_sweep(ns, stdout) -> int:
    if ns.figure:
        fig = build_figure(ns.figure)
        tb = fig.table
        tb.comments = [f"figure {ns.figure}: {fig.claim}"] + tb.comments
        ok = fig.check(tb)
        _emit(_render(tb, ns.format, fig.x, fig.ys), ns.out, stdout)
        if not ok:
            print(f"figure {ns.figure}: self-check failed: {fig.claim}", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    if not ns.shape or not ns.beta_grid:
        raise UsageError("sweep needs --figure ID, or --shape with --beta-grid")
    shape = shape_from_args(ns)
    ref = Disk(math.sqrt(summary(shape).area / math.pi))
    rows = []
    for b in parse_grid(ns.beta_grid):
        q, lam = verify.q_steady_of(shape, b), verify.lambda1_of(shape, b)
        rows.append([b, q, lam, q / verify.q_steady_of(ref, b), lam / verify.lambda1_of(ref, b)])
    tb = Table(["beta", "q_steady", "lambda1", "q_ratio", "lambda_ratio"], rows,
               [f"shape {ns.shape}; ratios against the disk of equal area"], f"sweep {ns.shape}")
    _emit(_render(tb, ns.format, "beta", ["q_ratio", "lambda_ratio"]), ns.out, stdout)
    return EXIT_OK


def cmd_verify(ns, stdout) -> int:
    reports = verify.run_suite(ns.suite)
    ok = verify.suite_passed(reports)
    if ns.format == "csv":
        text = "".join(r.to_csv() for r in reports)
    else:
        text = json.dumps({"suite": ns.suite, "pass": ok, "reports": [r.to_dict() for r in reports]},
                          indent=1, sort_keys=True) + "\n"
    _emit(text, ns.out, stdout)
    for r in reports:
        state = "ok" if r.passed else ("exploratory" if r.exploratory else "FAIL")
        print(f"{r.id}: {state} (min margin {fmt(r.min_margin)})", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(ns, stdout) -> int:
    tb = build_table(ns.table)
    _emit(_render(tb, ns.format), ns.out, stdout)
    return EXIT_OK


# --------------------------------------------------------------- parser


def _finite(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {s!r}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slipflow", description="Duct flow with Navier slip.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shape_args(sp, required=True):
        sp.add_argument("--shape", choices=["disk", "rect", "tri", "ngon", "ellipse", "fourier"], required=required)
        sp.add_argument("--radius", type=_finite)
        sp.add_argument("--a", type=_finite, help="rectangle or triangle half-side")
        sp.add_argument("--b", type=_finite, help="rectangle half-side")
        sp.add_argument("--aspect", type=_finite, default=1.0, help="rectangle b/a when sized by --area")
        sp.add_argument("--n", type=int, help="number of polygon sides")
        sp.add_argument("--axis", type=_finite, help="ellipse semi-axis (the other is its reciprocal)")
        sp.add_argument("--a0", type=_finite, default=0.0)
        sp.add_argument("--an", help="comma-separated cosine coefficients")
        sp.add_argument("--bn", help="comma-separated sine coefficients")
        sp.add_argument("--area", type=_finite)
        sp.add_argument("--beta", type=_finite, default=0.0)
        sp.add_argument("--dp", type=_finite, default=1.0)

    def io_args(sp, formats=("csv", "json", "svg")):
        sp.add_argument("--format", choices=list(formats), default="csv" if "csv" in formats else formats[0])
        sp.add_argument("--out")

    c = sub.add_parser("compute", help="steady flux, lambda1 and geometry of one shape")
    shape_args(c)
    c.add_argument("--functionals", default="q_steady,lambda1,geometry")
    io_args(c, ("csv", "json"))

    t = sub.add_parser("transient", help="starting-flow flux Q(t)")
    shape_args(t)
    t.add_argument("--t-grid", required=True, help="start:stop:n[:lin|log]")
    t.add_argument("--modes", type=int, default=64)
    io_args(t)

    pe = sub.add_parser("periodic", help="pulsatile flux in the disk")
    shape_args(pe)
    pe.add_argument("--omega", type=_finite, default=1.0)
    pe.add_argument("--omega-grid", help="start:stop:n[:lin|log]")
    io_args(pe)

    sw = sub.add_parser("sweep", help="figure data or a custom slip-length sweep")
    sw.add_argument("--figure", help=f"one of {', '.join(FIGURES)}")
    shape_args(sw, required=False)
    sw.add_argument("--beta-grid", help="start:stop:n[:lin|log]")
    io_args(sw)

    v = sub.add_parser("verify", help="run an inequality suite")
    v.add_argument("--suite", default="all", help=f"one of {', '.join(list(verify.SUITES) + ['all'])}")
    io_args(v, ("json", "csv"))

    tb = sub.add_parser("table", help="print a table")
    tb.add_argument("--table", required=True, help=f"one of {', '.join(TABLES)}")
    io_args(tb, ("csv", "json"))
    return p


COMMANDS = {"compute": cmd_compute, "transient": cmd_transient, "periodic": cmd_periodic, "sweep": cmd_sweep,
            "verify": cmd_verify, "table": cmd_table}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        ns = build_parser().parse_args(argv)
        if getattr(ns, "modes", 1) < 1:
            raise UsageError("--modes must be at least 1")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ellipse.PerturbationRegimeWarning)
            return COMMANDS[ns.command](ns, stdout)
    except (UsageError, UnknownIdError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"slipflow: usage error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (SlipflowError, DomainError, UnavailableError) as exc:
        print(f"slipflow: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"slipflow: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
