"""Regular n-gons by linear finite elements with Richardson extrapolation.

No closed forms exist for n >= 5, so Q_steady and λ1 come from P1 elements
on a structured mesh (each of the n centre-to-side sectors split into m²
congruent triangles). The slip condition enters through the boundary mass
term (1/β)∫ u v ds; β = 0 pins the boundary nodes to zero. Results at m and
2m are combined assuming an h² leading error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh, spsolve

from . import kernels
from .errors import DomainError

DEFAULT_M = 24


@dataclass(frozen=True)
class PolygonMesh:
    points: np.ndarray
    triangles: np.ndarray
    boundary_edges: np.ndarray
    boundary: np.ndarray  # bool per node


def polygon_mesh(n: int, area: float = math.pi, m: int = DEFAULT_M) -> PolygonMesh:
    if n < 3:
        raise DomainError("a polygon needs at least 3 sides")
    if not area > 0 or m < 1:
        raise DomainError("area must be positive and m at least 1")
    circ = math.sqrt(2.0 * area / (n * math.sin(2.0 * math.pi / n)))
    ang = 2.0 * math.pi * np.arange(n + 1) / n + math.pi / 2.0
    verts = circ * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    # lattice (i, j) with i + j <= m in each sector: centre + i/m (v_k) + j/m (v_{k+1})
    ii, jj = np.meshgrid(np.arange(m + 1), np.arange(m + 1), indexing="ij")
    keep = ii + jj <= m
    ii, jj = ii[keep], jj[keep]
    local = {(int(i), int(j)): k for k, (i, j) in enumerate(zip(ii, jj))}
    tri_local = []
    for i in range(m):
        for j in range(m - i):
            tri_local.append((local[i, j], local[i + 1, j], local[i, j + 1]))
            if i + j + 1 < m:
                tri_local.append((local[i + 1, j], local[i + 1, j + 1], local[i, j + 1]))
    tri_local = np.array(tri_local, dtype=np.int64)
    edge_local = np.array([(local[m - k, k], local[m - k - 1, k + 1]) for k in range(m)], dtype=np.int64)

    pts_all, tris_all, edges_all = [], [], []
    offset = 0
    for s in range(n):
        p = (ii[:, None] * verts[s] + jj[:, None] * verts[s + 1]) / m
        pts_all.append(p)
        tris_all.append(tri_local + offset)
        edges_all.append(edge_local + offset)
        offset += p.shape[0]
    pts = np.concatenate(pts_all)
    # merge duplicated nodes on the sector rays and at the centre
    key = np.round(pts / circ * (8.0 * m)).astype(np.int64)
    _, first, inverse = np.unique(key, axis=0, return_index=True, return_inverse=True)
    inverse = inverse.ravel()
    pts = pts[first]
    tris = inverse[np.concatenate(tris_all)]
    edges = inverse[np.concatenate(edges_all)]
    boundary = np.zeros(pts.shape[0], dtype=bool)
    boundary[edges.ravel()] = True
    return PolygonMesh(pts, tris, edges, boundary)


@dataclass(frozen=True)
class _System:
    stiffness: sp.csr_matrix
    mass: sp.csr_matrix
    boundary_mass: sp.csr_matrix
    load: np.ndarray
    interior: np.ndarray


@lru_cache(maxsize=32)
def _system(n: int, area: float, m: int) -> _System:
    mesh = polygon_mesh(n, area, m)
    rows, cols, kv, mv = kernels.p1_assemble(mesh.points, mesh.triangles)
    size = mesh.points.shape[0]
    k = sp.csr_matrix((kv, (rows, cols)), shape=(size, size))
    mm = sp.csr_matrix((mv, (rows, cols)), shape=(size, size))
    e = mesh.boundary_edges
    seg = np.linalg.norm(mesh.points[e[:, 0]] - mesh.points[e[:, 1]], axis=1)
    br = np.concatenate([e[:, 0], e[:, 1], e[:, 0], e[:, 1]])
    bc = np.concatenate([e[:, 0], e[:, 1], e[:, 1], e[:, 0]])
    bv = np.concatenate([seg / 3.0, seg / 3.0, seg / 6.0, seg / 6.0])
    mb = sp.csr_matrix((bv, (br, bc)), shape=(size, size))
    load = np.asarray(mm.sum(axis=1)).ravel()
    return _System(k, mm, mb, load, np.flatnonzero(~mesh.boundary))


def _operator(sysm: _System, beta: float):
    if beta == 0.0:
        idx = sysm.interior
        return sysm.stiffness[idx][:, idx].tocsc(), sysm.mass[idx][:, idx].tocsc(), sysm.load[idx]
    a = (sysm.stiffness + sysm.boundary_mass * (1.0 / beta)).tocsc()
    return a, sysm.mass.tocsc(), sysm.load


@lru_cache(maxsize=4096)
def q_steady_fem(n: int, beta: float, area: float = math.pi, m: int = DEFAULT_M) -> float:
    """Flux at one mesh level (unit pressure gradient)."""
    if not beta >= 0:
        raise DomainError("slip length must be nonnegative")
    a, _, f = _operator(_system(n, float(area), m), beta)
    return float(f @ spsolve(a, f))


@lru_cache(maxsize=4096)
def lambda1_fem(n: int, beta: float, area: float = math.pi, m: int = DEFAULT_M) -> float:
    """Fundamental eigenvalue at one mesh level."""
    if not beta >= 0:
        raise DomainError("slip length must be nonnegative")
    a, mm, _ = _operator(_system(n, float(area), m), beta)
    vals = eigsh(a, k=1, M=mm, sigma=0.0, which="LM", return_eigenvectors=False)
    return float(vals[0])


@dataclass(frozen=True)
class Extrapolated:
    value: float
    coarse: float
    fine: float

    @property
    def error_estimate(self) -> float:
        return abs(self.fine - self.coarse) / 3.0


def _richardson(f, m: int) -> Extrapolated:
    c, fi = f(m), f(2 * m)
    return Extrapolated((4.0 * fi - c) / 3.0, c, fi)


def q_steady_ngon(n: int, beta: float, area: float = math.pi, m: int = DEFAULT_M) -> Extrapolated:
    return _richardson(lambda k: q_steady_fem(n, beta, area, k), m)


def lambda1_ngon(n: int, beta: float, area: float = math.pi, m: int = DEFAULT_M) -> Extrapolated:
    return _richardson(lambda k: lambda1_fem(n, beta, area, k), m)
