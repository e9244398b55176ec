import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from shapely.geometry import Point, Polygon

from slipflow.errors import DomainError, UnavailableError
from slipflow.geomfn import (Disk, EllipseUnitArea, EquilateralTriangle, FourierBoundary, Rectangle, RegularPolygon,
                             area_from_coefficients, b_functional, ellipse_boundary_expansion, ellipse_polar_radius,
                             fourier_functionals, fraenkel_alpha_ellipse, fraenkel_alpha_fixture, ngon_deficit_ratio,
                             polygon_table_row, summary)

SHAPES = st.one_of(
    st.floats(0.1, 5.0).map(Disk),
    st.tuples(st.floats(0.1, 5.0), st.floats(0.1, 5.0)).map(lambda t: Rectangle(*t)),
    st.floats(0.1, 5.0).map(EquilateralTriangle),
    st.tuples(st.integers(3, 40), st.floats(0.1, 20.0)).map(lambda t: RegularPolygon(*t)),
    st.floats(1.0, 4.0).map(EllipseUnitArea),
)


def _regular_polygon(n, area):
    s = RegularPolygon(n, area)
    ang = 2 * np.pi * np.arange(n) / n + np.pi / 2
    return Polygon(np.c_[s.circumradius * np.cos(ang), s.circumradius * np.sin(ang)])


@given(SHAPES)
def test_isoperimetric_chain(s):
    g = summary(s)
    ic = 2.0 * g.polar_moment / math.pi
    assert (g.area / math.pi) ** 2 <= ic * (1 + 1e-12)
    assert ic <= (g.perimeter / (2 * math.pi)) ** 4 * (1 + 1e-12)


def test_disk_chain_equality():
    g = summary(Disk(1.7))
    ic = 2.0 * g.polar_moment / math.pi
    assert ic == pytest.approx((g.area / math.pi) ** 2, rel=1e-12)
    assert ic == pytest.approx((g.perimeter / (2 * math.pi)) ** 4, rel=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 9])
def test_polygon_summary_against_shapely(n):
    poly = _regular_polygon(n, 2.5)
    g = summary(RegularPolygon(n, 2.5))
    assert g.area == pytest.approx(poly.area, rel=1e-12)
    assert g.perimeter == pytest.approx(poly.length, rel=1e-12)


def test_triangle_matches_polygon():
    t = summary(EquilateralTriangle(0.8))
    p = summary(RegularPolygon(3, math.sqrt(3) * 0.64))
    for f in ("area", "perimeter", "polar_moment", "b_functional"):
        assert getattr(t, f) == pytest.approx(getattr(p, f), rel=1e-13)


def test_rectangle_functionals():
    g = summary(Rectangle(1.0, 2.0))
    assert (g.area, g.perimeter) == (8.0, 12.0)
    assert g.polar_moment == pytest.approx(8.0 * 5.0 / 3.0)
    assert g.b_functional == pytest.approx(10.0)


@pytest.mark.parametrize("n", [3, 4, 6])
def test_fraenkel_fixtures_against_shapely(n):
    poly = _regular_polygon(n, math.pi)
    disk = Point(0, 0).buffer(1.0, 4096)
    two_alpha = poly.symmetric_difference(disk).area / math.pi
    assert two_alpha == pytest.approx(2 * fraenkel_alpha_fixture(n), abs=2e-6)


@given(st.floats(1.0, 3.0))
def test_ellipse_asymmetry_closed_form(a):
    t = np.linspace(0, 2 * np.pi, 20001)
    r = ellipse_polar_radius(a, t)
    outside = np.trapezoid(np.maximum(r * r - 1.0, 0.0) / 2.0, t) / math.pi
    assert fraenkel_alpha_ellipse(a) == pytest.approx(outside, abs=1e-6)


@given(st.floats(1.0, 3.0))
def test_ellipse_deficit_and_moment_bounds(a):
    g = summary(EllipseUnitArea(a))
    al = fraenkel_alpha_ellipse(a)
    assert g.deficit_ratio >= math.sqrt(1 + 2 * al * al) - 1 - 1e-12
    assert g.polar_moment >= g.area ** 2 / (2 * math.pi) * (1 + 2 * al * al) * (1 - 1e-12)


def test_ngon_deficit_asymptote():
    n = 64
    assert ngon_deficit_ratio(n) * 3 * n * n / math.pi ** 2 == pytest.approx(1.0, rel=0.02)
    for k in (3, 4, 6, 11):
        assert summary(RegularPolygon(k, 1.0)).deficit_ratio == pytest.approx(ngon_deficit_ratio(k), rel=1e-12)


def test_polygon_table_printed_digits():
    expect = {3: (0.653986686, 0.099636111, 0.032759195), 4: (0.273239544, 0.023326708, 0.008165237),
              6: (0.102657791, 0.003825838, 0.001385327)}
    for n, vals in expect.items():
        row = polygon_table_row(n)
        got = (row["deficit_ratio"], row["moment_excess"], row["asymmetry_bound"])
        for g, e in zip(got, vals):
            assert abs(g - e) < 1e-9


def test_fourier_area_identity_and_estimators():
    fb = FourierBoundary(0.01, (0.02, 0.05, 0.0, 0.01), (0.0, 0.03))
    assert summary(fb).area == pytest.approx(area_from_coefficients(fb), rel=1e-12)
    errs = []
    for k in (1.0, 0.5, 0.25):
        f = FourierBoundary(0.01 * k, tuple(k * c for c in (0.02, 0.05, 0.0, 0.01)), (0.0, 0.03 * k))
        ff = fourier_functionals(f)
        errs.append([abs(e.error) for e in (ff.perimeter, ff.moment_radius)])
    errs = np.array(errs)
    assert np.all(errs[0] / errs[1] >= 6.0) and np.all(errs[1] / errs[2] >= 6.0)


def test_ellipse_expansion_close_to_exact():
    for d in (0.05, 0.025):
        a = 1 + d
        fb = ellipse_boundary_expansion(a)
        t = np.linspace(0, 2 * np.pi, 721)
        assert np.max(np.abs(fb.radius(t) - ellipse_polar_radius(a, t))) < 2 * d ** 3


def test_domain_errors():
    with pytest.raises(DomainError):
        Disk(0.0)
    with pytest.raises(DomainError):
        Rectangle(1.0, -1.0)
    with pytest.raises(DomainError):
        RegularPolygon(2)
    with pytest.raises(DomainError):
        EllipseUnitArea(0.5)
    with pytest.raises(DomainError):
        FourierBoundary(-1.5)
    with pytest.raises(DomainError):
        fraenkel_alpha_fixture(5)
    with pytest.raises(UnavailableError):
        b_functional(FourierBoundary(0.0, (0.01, 0.54, -0.43)))
