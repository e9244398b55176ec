import math

import numpy as np
import pytest

from slipflow import disk, ngon, rect, tri
from slipflow.errors import DomainError


def test_mesh_area_and_boundary():
    m = ngon.polygon_mesh(5, 2.0, 6)
    p, t = m.points, m.triangles
    v1, v2 = p[t[:, 1]] - p[t[:, 0]], p[t[:, 2]] - p[t[:, 0]]
    areas = 0.5 * (v1[:, 0] * v2[:, 1] - v1[:, 1] * v2[:, 0])
    assert np.all(areas > 0) and areas.sum() == pytest.approx(2.0, rel=1e-13)
    assert m.boundary.sum() == 5 * 6


@pytest.mark.parametrize("beta", [0.0, 0.1, 1.0])
def test_square_and_triangle_against_exact(beta):
    h = math.sqrt(math.pi) / 2
    q4 = ngon.q_steady_ngon(4, beta)
    assert q4.value == pytest.approx(rect.q_steady_rect(h, h, beta), rel=2e-5)
    l4 = ngon.lambda1_ngon(4, beta)
    assert l4.value == pytest.approx(rect.lambda1_square(h, beta), rel=2e-5)
    a3 = math.sqrt(math.pi / math.sqrt(3))
    assert ngon.q_steady_ngon(3, beta).value == pytest.approx(tri.q_steady_tri(a3, beta), rel=2e-5)
    assert ngon.lambda1_ngon(3, beta).value == pytest.approx(tri.lambda1_tri(a3, beta), rel=2e-5)
    assert l4.error_estimate < 1e-2 * l4.value


def test_hexagon_between_square_and_disk():
    for beta in (0.0, 1.0):
        h = math.sqrt(math.pi) / 2
        q6 = ngon.q_steady_ngon(6, beta).value
        assert rect.q_steady_rect(h, h, beta) < q6 < disk.q_steady_disk(1.0, beta)
        l6 = ngon.lambda1_ngon(6, beta).value
        assert disk.lambda1_disk(1.0, beta) < l6 < rect.lambda1_square(h, beta)


def test_errors():
    with pytest.raises(DomainError):
        ngon.polygon_mesh(2)
    with pytest.raises(DomainError):
        ngon.q_steady_fem(5, -1.0)
