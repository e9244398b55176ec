"""Independent reference solvers used to freeze expected values.

Nothing here imports slipflow. Each oracle attacks the same problem with a
different method from the library:

* rectangles: cell-centred finite differences for -Δu = 1 with the slip
  condition imposed through ghost cells, Richardson-extrapolated in h;
* ellipses: Rayleigh-Ritz with tensor Chebyshev polynomials for both the
  flux and the fundamental eigenvalue;
* disk: scipy's Bessel functions and brentq;
* triangle: finite-difference residuals of the explicit Lamé mode.

Run as a script to print the values frozen in test_oracle_values.py.
"""
from __future__ import annotations

import math

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
from numpy.polynomial import chebyshev as C
from scipy.optimize import brentq
from scipy.sparse.linalg import spsolve
from scipy.special import j0, j1, jn_zeros


# ------------------------------------------------------------ rectangles


def fd_rect_q(a: float, b: float, beta: float, n: int) -> float:
    """Flux through (-a, a) x (-b, b) on an n x n' cell-centred grid.

    The slip condition u + β du/dn = 0 is imposed at each wall through a
    ghost value g = κ u_1 with κ = (β/h - 1/2)/(β/h + 1/2); β = 0 gives the
    Dirichlet ghost g = -u_1. Midpoint integration is second order.
    """
    nx = n
    ny = max(2, int(round(n * b / a)))
    hx, hy = 2.0 * a / nx, 2.0 * b / ny
    kx = (beta / hx - 0.5) / (beta / hx + 0.5)
    ky = (beta / hy - 0.5) / (beta / hy + 0.5)

    def lap1d(m, h, k):
        main = np.full(m, -2.0)
        main[0] += k
        main[-1] += k
        return sp.diags([np.ones(m - 1), main, np.ones(m - 1)], [-1, 0, 1]) / (h * h)

    lx = lap1d(nx, hx, kx)
    ly = lap1d(ny, hy, ky)
    lap = sp.kron(sp.identity(ny), lx) + sp.kron(ly, sp.identity(nx))
    u = spsolve((-lap).tocsc(), np.ones(nx * ny))
    return float(u.sum() * hx * hy)


def fd_rect_q_extrapolated(a: float, b: float, beta: float, n: int = 96) -> float:
    """Two Richardson steps on n, 2n, 4n (errors h², h⁴)."""
    q1, q2, q4 = (fd_rect_q(a, b, beta, m) for m in (n, 2 * n, 4 * n))
    r1 = (4.0 * q2 - q1) / 3.0
    r2 = (4.0 * q4 - q2) / 3.0
    return (16.0 * r2 - r1) / 15.0


# ------------------------------------------------------------- ellipses


def _gauss_disk(nr: int, nt: int):
    """Nodes and weights on the unit disk in polar form (Gauss in r, trapezoid in θ)."""
    g, w = np.polynomial.legendre.leggauss(nr)
    r = 0.5 * (g + 1.0)
    wr = 0.5 * w * r
    t = 2.0 * np.pi * np.arange(nt) / nt
    R, T = np.meshgrid(r, t, indexing="ij")
    W = np.outer(wr, np.full(nt, 2.0 * np.pi / nt))
    return R.ravel(), T.ravel(), W.ravel()


def _even_cheb(deg: int):
    """Even-even tensor index pairs with total degree <= deg."""
    return [(i, j) for i in range(0, deg + 1, 2) for j in range(0, deg + 1 - i, 2)]


def _cheb_eval(k: int, s):
    c = np.zeros(k + 1)
    c[k] = 1.0
    return C.chebval(s, c), C.chebval(s, C.chebder(c))


def ritz_ellipse(a: float, beta: float, deg: int = 16, nr: int = 40, nt: int = 256):
    """(Q_steady, λ1) of the unit-area ellipse x²/a² + a²y² < 1 by Rayleigh-Ritz.

    Basis T_i(x/a) T_j(a y) (even i, j); for β = 0 each basis function is
    multiplied by the defining quadratic so it vanishes on the boundary.
    """
    b = 1.0 / a
    R, T, W = _gauss_disk(nr, nt)
    x, y = a * R * np.cos(T), b * R * np.sin(T)
    W = W * a * b
    tb = 2.0 * np.pi * np.arange(4 * nt) / (4 * nt)
    xb, yb = a * np.cos(tb), b * np.sin(tb)
    ds = np.hypot(a * np.sin(tb), b * np.cos(tb)) * (2.0 * np.pi / (4 * nt))
    idx = _even_cheb(deg)

    def basis(px, py):
        vals, dx, dy = [], [], []
        for i, j in idx:
            fx, dfx = _cheb_eval(i, px / a)
            fy, dfy = _cheb_eval(j, py / b)
            vals.append(fx * fy)
            dx.append(dfx * fy / a)
            dy.append(fx * dfy / b)
        v, gx, gy = np.array(vals), np.array(dx), np.array(dy)
        if beta == 0.0:
            m = 1.0 - (px / a) ** 2 - (py / b) ** 2
            mx, my = -2.0 * px / a ** 2, -2.0 * py / b ** 2
            gx, gy = gx * m + v * mx, gy * m + v * my
            v = v * m
        return v, gx, gy

    v, gx, gy = basis(x, y)
    K = (gx * W) @ gx.T + (gy * W) @ gy.T
    M = (v * W) @ v.T
    f = v @ W
    if beta > 0.0:
        vb, _, _ = basis(xb, yb)
        K = K + (vb * ds) @ vb.T / beta
    q = float(f @ sla.solve(K, f, assume_a="pos"))
    lam = float(sla.eigh(K, M, eigvals_only=True, subset_by_index=[0, 0])[0])
    return q, lam


def ellipse_q_exact_b0(a: float) -> float:
    """u = (1 - x²/a² - a²y²)/(2(a⁻² + a²)) integrated over the ellipse."""
    return math.pi / (4.0 * (a * a + 1.0 / (a * a)))


# ------------------------------------------------------------------ disk


def disk_gamma1(k: float) -> float:
    """First root of J0(γ) = kγJ1(γ) via scipy."""
    if k == 0.0:
        return float(jn_zeros(0, 1)[0])
    return brentq(lambda g: j0(g) - k * g * j1(g), 1e-12, float(jn_zeros(0, 1)[0]), xtol=1e-15, rtol=1e-15)


def disk_lambda1(radius: float, beta: float) -> float:
    return (disk_gamma1(beta / radius) / radius) ** 2


# -------------------------------------------------------------- triangle


def triangle_mode_residuals(mode, lam: float, beta: float, h: float = 1e-4):
    """Max |Δv + λv| inside and |v + β ∂v/∂n| on the edges of the unit triangle,
    both relative to max |v|, by central differences."""
    s3 = math.sqrt(3.0)
    u = np.linspace(0.1, 0.9, 9)
    U, V = np.meshgrid(u, u)
    keep = U + V < 0.95
    px = -1.0 + 2.0 * U[keep] + V[keep]
    py = s3 * V[keep]
    vals = mode(px, py)
    lap = (mode(px + h, py) + mode(px - h, py) + mode(px, py + h) + mode(px, py - h) - 4.0 * vals) / (h * h)
    scale = np.max(np.abs(vals))
    pde = float(np.max(np.abs(lap + lam * vals)) / scale)
    edges = [((-1.0, 0.0), (1.0, 0.0)), ((1.0, 0.0), (0.0, s3)), ((0.0, s3), (-1.0, 0.0))]
    bc = 0.0
    for (x0, y0), (x1, y1) in edges:
        tt = np.linspace(0.05, 0.95, 19)
        ex, ey = x0 + tt * (x1 - x0), y0 + tt * (y1 - y0)
        L = math.hypot(x1 - x0, y1 - y0)
        nx, ny = (y1 - y0) / L, -(x1 - x0) / L  # outward for counter-clockwise vertices
        dn = (mode(ex + h * nx, ey + h * ny) - mode(ex - h * nx, ey - h * ny)) / (2.0 * h)
        bc = max(bc, float(np.max(np.abs(mode(ex, ey) + beta * dn)) / scale))
    return pde, bc


if __name__ == "__main__":
    np.set_printoptions(precision=14)
    h = math.sqrt(math.pi) / 2.0
    for name, (a, b) in {"square": (h, h), "rect1:2": (h / math.sqrt(2), h * math.sqrt(2)),
                         "rect1:4": (h / 2, 2 * h)}.items():
        for beta in (0.0, 0.1, 1.0):
            print(f"rect {name} beta={beta}: {fd_rect_q_extrapolated(a, b, beta)!r}")
    for a in (1.05, 1.2, 1.5):
        for beta in (0.0, 0.1, 1.0):
            q, lam = ritz_ellipse(a, beta)
            print(f"ellipse a={a} beta={beta}: q={q!r} lam={lam!r}")
    for k in (0.0, 0.01, 0.1, 1.0, 10.0, 1000.0):
        print(f"disk k={k}: gamma1={disk_gamma1(k)!r}")
