"""Hot numerical kernels with a numba path and a pure-numpy path.

Every public kernel dispatches on :data:`slipflow._accel.USE_NUMBA`. The two
implementations follow the same algorithm, so they agree to rounding.
"""
from __future__ import annotations

import math

import numpy as np

from ._accel import USE_NUMBA, njit

SERIES_RTOL = 1e-16
SERIES_CAP = 250
_SERIES_SWITCH = 8.0


# ---------------------------------------------------------------- Bessel J_n


def _jn_scalar(n, x):
    sign = 1.0
    if x < 0.0:
        x = -x
        if n % 2 == 1:
            sign = -1.0
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x <= _SERIES_SWITCH or 2.0 * x < n:
        # ascending series
        half = 0.5 * x
        if n == 0:
            term = 1.0
        elif half == 0.0:  # subnormal x
            term = 0.0
        else:
            term = math.exp(n * math.log(half) - math.lgamma(n + 1.0))
        total = term
        q = -half * half
        for k in range(1, SERIES_CAP):
            term *= q / (k * (k + n))
            total += term
            if abs(term) < SERIES_RTOL * abs(total):
                break
        return sign * total
    # Miller's backward recurrence, normalised by J0 + 2*sum J_2k = 1
    big = max(float(n), x)
    m = 2 * ((int(big) + 16 + int(math.sqrt(40.0 * big))) // 2)
    bjp = 0.0
    bj = 1.0
    ans = 0.0
    norm = 0.0
    for k in range(m, 0, -1):
        bjm = 2.0 * k / x * bj - bjp
        bjp = bj
        bj = bjm
        if abs(bj) > 1e200:
            bj *= 1e-200
            bjp *= 1e-200
            ans *= 1e-200
            norm *= 1e-200
        if k - 1 == n:
            ans = bj
        if (k - 1) % 2 == 0 and k > 1:
            norm += 2.0 * bj
    norm += bj
    return sign * ans / norm


_jn_scalar_nb = njit(_jn_scalar)


@njit
def _jn_array_nb(n, x):
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        out[i] = _jn_scalar_nb(n, x[i])
    return out


def _jn_array_np(n, x):
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    out = np.empty_like(ax)
    ser = (ax <= _SERIES_SWITCH) | (2.0 * ax < n)
    if ser.any():
        xs = ax[ser]
        zero = xs == 0.0
        half = 0.5 * np.where(zero, 1.0, xs)
        if n == 0:
            term = np.ones_like(half)
        else:
            with np.errstate(divide="ignore"):
                term = np.exp(n * np.log(half) - math.lgamma(n + 1.0))
        total = term.copy()
        q = -half * half
        active = np.ones(xs.shape, dtype=bool)
        for k in range(1, SERIES_CAP):
            term = np.where(active, term * q / (k * (k + n)), 0.0)
            total = total + term
            active &= ~(np.abs(term) < SERIES_RTOL * np.abs(total))
            if not active.any():
                break
        total[zero] = 1.0 if n == 0 else 0.0
        out[ser] = total
    if (~ser).any():
        xm = ax[~ser]
        big = max(float(n), float(xm.max()))
        m = 2 * ((int(big) + 16 + int(math.sqrt(40.0 * big))) // 2)
        bjp = np.zeros_like(xm)
        bj = np.ones_like(xm)
        ans = np.zeros_like(xm)
        norm = np.zeros_like(xm)
        for k in range(m, 0, -1):
            bjm = 2.0 * k / xm * bj - bjp
            bjp = bj
            bj = bjm
            scale = np.where(np.abs(bj) > 1e200, 1e-200, 1.0)
            bj = bj * scale
            bjp = bjp * scale
            ans = ans * scale
            norm = norm * scale
            if k - 1 == n:
                ans = bj.copy()
            if (k - 1) % 2 == 0 and k > 1:
                norm = norm + 2.0 * bj
        norm = norm + bj
        out[~ser] = ans / norm
    if n % 2 == 1:
        out = np.where(x < 0.0, -out, out)
    return out


def jn_array(n: int, x) -> np.ndarray:
    """J_n at every entry of ``x`` (float64 array in, float64 array out)."""
    x = np.ascontiguousarray(np.atleast_1d(np.asarray(x, dtype=float)))
    if USE_NUMBA:
        return _jn_array_nb(int(n), x)
    return _jn_array_np(int(n), x)


# ------------------------------------------------- strip roots mu tan(mu c) = 1/beta


def _strip_root_scalar(c, beta, k):
    lo = k * math.pi / c
    hi = (k + 0.5) * math.pi / c
    if beta == 0.0:
        return hi
    # g(mu) = beta*mu*sin(mu c) - cos(mu c) has no poles; s*g is -1 at lo and > 0 at hi
    s = 1.0 if k % 2 == 0 else -1.0
    mu = 0.5 * (lo + hi)
    for _ in range(400):
        sn = math.sin(mu * c)
        cs = math.cos(mu * c)
        g = s * (beta * mu * sn - cs)
        if g == 0.0:
            return mu
        if g > 0.0:
            hi = mu
        else:
            lo = mu
        dg = s * (beta * sn + beta * mu * c * cs + c * sn)
        step = mu - g / dg if dg != 0.0 else lo - 1.0
        if lo < step < hi:
            nxt = step
        else:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - mu) <= 4e-16 * nxt or hi - lo <= 4e-16 * hi:
            return nxt
        mu = nxt
    return mu


_strip_root_scalar_nb = njit(_strip_root_scalar)


@njit
def _strip_roots_nb(c, beta, k):
    out = np.empty(c.shape[0])
    for i in range(c.shape[0]):
        out[i] = _strip_root_scalar_nb(c[i], beta, k[i])
    return out


def _strip_roots_np(c, beta, k):
    lo = k * np.pi / c
    hi = (k + 0.5) * np.pi / c
    if beta == 0.0:
        return hi.copy()
    s = np.where(k % 2 == 0, 1.0, -1.0)
    mu = 0.5 * (lo + hi)
    done = np.zeros(c.shape, dtype=bool)
    for _ in range(400):
        sn = np.sin(mu * c)
        cs = np.cos(mu * c)
        g = s * (beta * mu * sn - cs)
        hi = np.where(~done & (g > 0.0), mu, hi)
        lo = np.where(~done & (g < 0.0), mu, lo)
        dg = s * (beta * sn + beta * mu * c * cs + c * sn)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = mu - g / dg
        inside = (step > lo) & (step < hi)
        nxt = np.where(inside, step, 0.5 * (lo + hi))
        nxt = np.where(g == 0.0, mu, nxt)
        fin = (np.abs(nxt - mu) <= 4e-16 * nxt) | (hi - lo <= 4e-16 * hi) | (g == 0.0)
        mu = np.where(done, mu, nxt)
        done |= fin
        if done.all():
            break
    return mu


def strip_roots(c, beta: float, branch=0) -> np.ndarray:
    """Root of mu*tan(mu*c) = 1/beta on the given branch, broadcast over ``c`` and ``branch``."""
    c, k = np.broadcast_arrays(np.atleast_1d(np.asarray(c, dtype=float)), np.asarray(branch, dtype=np.int64))
    c = np.ascontiguousarray(c, dtype=float)
    k = np.ascontiguousarray(k, dtype=np.int64)
    if USE_NUMBA:
        return _strip_roots_nb(c, float(beta), k)
    return _strip_roots_np(c, float(beta), k)


# ------------------------------------------------------------ decaying mode sum


@njit
def _decay_sum_nb(lam, w, t):
    out = np.empty(t.shape[0])
    for i in range(t.shape[0]):
        acc = 0.0
        for j in range(lam.shape[0] - 1, -1, -1):
            acc += w[j] * math.exp(-lam[j] * t[i])
        out[i] = acc
    return out


def _decay_sum_np(lam, w, t):
    # same summation order as the loop kernel: smallest weights first
    e = np.exp(-np.outer(t, lam[::-1])) * w[::-1]
    return np.cumsum(e, axis=1)[:, -1] if e.shape[1] else np.zeros(t.shape[0])


def decay_sum(lam, w, t) -> np.ndarray:
    """sum_j w_j exp(-lam_j t) at every time in ``t``."""
    lam = np.ascontiguousarray(np.asarray(lam, dtype=float))
    w = np.ascontiguousarray(np.asarray(w, dtype=float))
    t = np.ascontiguousarray(np.atleast_1d(np.asarray(t, dtype=float)))
    if USE_NUMBA:
        return _decay_sum_nb(lam, w, t)
    return _decay_sum_np(lam, w, t)


# ------------------------------------------------------- P1 finite elements


@njit
def _p1_assemble_nb(pts, tris):
    nt = tris.shape[0]
    rows = np.empty(9 * nt, dtype=np.int64)
    cols = np.empty(9 * nt, dtype=np.int64)
    kv = np.empty(9 * nt)
    mv = np.empty(9 * nt)
    b = np.empty(3)
    c = np.empty(3)
    for e in range(nt):
        i0 = tris[e, 0]
        i1 = tris[e, 1]
        i2 = tris[e, 2]
        x0, y0 = pts[i0, 0], pts[i0, 1]
        x1, y1 = pts[i1, 0], pts[i1, 1]
        x2, y2 = pts[i2, 0], pts[i2, 1]
        det = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        area = 0.5 * abs(det)
        b[0] = y1 - y2
        b[1] = y2 - y0
        b[2] = y0 - y1
        c[0] = x2 - x1
        c[1] = x0 - x2
        c[2] = x1 - x0
        idx = (i0, i1, i2)
        p = 9 * e
        for i in range(3):
            for j in range(3):
                rows[p] = idx[i]
                cols[p] = idx[j]
                kv[p] = (b[i] * b[j] + c[i] * c[j]) / (4.0 * area)
                mv[p] = area / 12.0 * (2.0 if i == j else 1.0)
                p += 1
    return rows, cols, kv, mv


def _p1_assemble_np(pts, tris):
    p0 = pts[tris[:, 0]]
    p1 = pts[tris[:, 1]]
    p2 = pts[tris[:, 2]]
    det = (p1[:, 0] - p0[:, 0]) * (p2[:, 1] - p0[:, 1]) - (p2[:, 0] - p0[:, 0]) * (p1[:, 1] - p0[:, 1])
    area = 0.5 * np.abs(det)
    b = np.stack([p1[:, 1] - p2[:, 1], p2[:, 1] - p0[:, 1], p0[:, 1] - p1[:, 1]], axis=1)
    c = np.stack([p2[:, 0] - p1[:, 0], p0[:, 0] - p2[:, 0], p1[:, 0] - p0[:, 0]], axis=1)
    k = (b[:, :, None] * b[:, None, :] + c[:, :, None] * c[:, None, :]) / (4.0 * area[:, None, None])
    m = (area / 12.0)[:, None, None] * (np.ones((3, 3)) + np.eye(3))
    rows = np.repeat(tris, 3, axis=1).reshape(-1)
    cols = np.tile(tris, (1, 3)).reshape(-1)
    return rows.astype(np.int64), cols.astype(np.int64), k.reshape(-1), m.reshape(-1)


def p1_assemble(pts, tris):
    """COO triplets (rows, cols, stiffness, mass) for linear triangles."""
    pts = np.ascontiguousarray(np.asarray(pts, dtype=float))
    tris = np.ascontiguousarray(np.asarray(tris, dtype=np.int64))
    if USE_NUMBA:
        return _p1_assemble_nb(pts, tris)
    return _p1_assemble_np(pts, tris)
