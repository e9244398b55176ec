import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from slipflow import disk
from slipflow.errors import DomainError, InsufficientModesError
from slipflow.modesum import completeness_area, q_periodic_sum, q_steady_sum, q_transient_sum

# first roots of J0(γ) = kγJ1(γ), frozen from the scipy oracle
GAMMA1 = {0.0: 2.4048255576957724, 0.01: 2.380901663491047, 0.1: 2.1794965966644573, 1.0: 1.2557837117945938,
          10.0: 0.4416817828748414, 1000.0: 0.044715769962375945}


@pytest.mark.parametrize("k", sorted(GAMMA1))
def test_gamma1_frozen(k):
    assert math.sqrt(disk.lambda1_disk(1.0, k)) == pytest.approx(GAMMA1[k], rel=1e-13)


def test_gamma1_oracle_live():
    assert math.sqrt(disk.lambda1_disk(1.0, 0.37)) == pytest.approx(oracles.disk_gamma1(0.37), rel=1e-13)


def test_q_steady_closed_form():
    assert disk.q_steady_disk(1.0, 0.0) == pytest.approx(math.pi / 8, rel=1e-15)
    assert disk.q_steady_disk(2.0, 0.5, dp=3.0) == pytest.approx(3 * math.pi * 8 * 4 / 8)


@pytest.mark.parametrize("beta", [0.0, 0.01, 1.0, 30.0, 1000.0])
def test_spectrum_residuals_and_order(beta):
    s = disk.disk_spectrum(1.0, beta, 200)
    assert np.max(np.abs(s.residuals(scaled=True))) <= 1e-10
    assert np.all(np.diff(s.roots) > 0)
    if beta <= 1.0:
        assert np.max(np.abs(s.residuals())) <= 1e-10


@given(st.floats(0.2, 5.0), st.floats(0.0, 50.0))
def test_scaling_law(a, beta):
    assert disk.lambda1_disk(a, beta) == pytest.approx(disk.lambda1_disk(1.0, beta / a) / a ** 2, rel=1e-10)


@pytest.mark.parametrize("beta", [0.0, 0.3, 2.0])
def test_completeness(beta):
    s = disk.disk_spectrum(1.0, beta, 200)
    assert completeness_area(s.raw_integrals).value == pytest.approx(math.pi, rel=0.01)
    fs = disk.flux_series(1.0, beta, n_modes=200)
    assert q_steady_sum(fs).value == pytest.approx(disk.q_steady_disk(1.0, beta), rel=0.01)
    part = np.cumsum(s.weights)
    assert np.all(np.diff(part) >= 0)


@pytest.mark.parametrize("beta", [0.0, 0.5])
def test_transient_shape(beta):
    t = np.logspace(-3, 0.5, 50)
    q = disk.q_transient_disk(1.0, beta, 1.0, t, n_modes=200)
    assert np.all(q > 0) and np.all(np.diff(q) > 0)
    late = disk.q_transient_disk(1.0, beta, 1.0, np.linspace(3.0, 20.0, 30), n_modes=200)
    assert np.all(np.diff(late) >= 0)
    tl = np.linspace(0.0, 3.0, 60)
    ql = disk.q_transient_disk(1.0, beta, 1.0, tl, n_modes=200)
    assert np.all(np.diff(ql, 2) <= 1e-12)
    assert abs(ql[0]) <= 1e-3 * disk.q_steady_disk(1.0, beta)
    fs = disk.flux_series(1.0, beta, n_modes=200)
    np.testing.assert_allclose(q_transient_sum(fs, t), q, rtol=1e-12)


def test_transient_needs_modes():
    with pytest.raises(InsufficientModesError):
        disk.q_transient_disk(1.0, 0.0, 1.0, [0.0, 1.0], n_modes=2)
    with pytest.raises(DomainError):
        disk.q_transient_disk(1.0, 0.0, 1.0, [-1.0])


@pytest.mark.parametrize("beta", [0.0, 1.0])
def test_periodic_limits(beta):
    qs = disk.q_steady_disk(1.0, beta)
    assert abs(disk.q_periodic_disk(1.0, beta, 1e-4) - qs) <= 1e-3 * qs
    fs = disk.flux_series(1.0, beta, n_modes=200)
    for w in (0.5, 1.0, 5.0):
        closed = disk.q_periodic_disk(1.0, beta, w)
        assert abs(q_periodic_sum(fs, w) - closed) <= 1e-6 * abs(closed) + 2e-6
        assert q_periodic_sum(fs, -w) == pytest.approx(q_periodic_sum(fs, w).conjugate(), rel=1e-14)


def test_periodic_phase_lags():
    lags = [disk.periodic_phase_lag(1.0, 0.0, w) for w in (0.1, 1.0, 10.0, 100.0)]
    assert all(l < 0 for l in lags) and np.all(np.diff(lags) < 0)
    with pytest.raises(DomainError):
        disk.q_periodic_disk(1.0, 0.0, 2000.0)
    with pytest.raises(DomainError):
        disk.q_periodic_disk(1.0, 0.0, 0.0)


def test_domain_errors():
    with pytest.raises(DomainError):
        disk.q_steady_disk(-1.0, 0.0)
    with pytest.raises(DomainError):
        disk.lambda1_disk(1.0, -0.1)
    with pytest.raises(DomainError):
        disk.disk_spectrum(1.0, 0.0, 0)
