import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from slipflow import disk, tri
from slipflow.errors import DomainError

SQ3 = math.sqrt(3.0)


def test_no_slip_values():
    assert tri.lambda1_tri(1.0, 0.0) * SQ3 == pytest.approx(4 * math.pi ** 2 / SQ3, rel=1e-15)
    assert tri.q_steady_tri(1.0, 0.0) == pytest.approx(SQ3 / 20, rel=1e-15)


def test_small_slip_continuity():
    assert tri.lambda1_tri(1.0, 1e-9) == pytest.approx(tri.LAMBDA_B0, rel=1e-7)
    assert tri.lambda1_tri(1.0, 1e-9) < tri.LAMBDA_B0


@given(st.floats(1e-3, 1e3))
def test_root_lies_in_bracket(beta):
    t = tri.t1_root(beta)
    assert 0 < t <= math.pi * beta / SQ3
    assert abs(tri.transcendental(t, beta)) < 1e-9 * (1 + 3 * t + 2 * t * t)


@given(st.floats(0.2, 5.0), st.floats(0.0, 50.0))
def test_scaling(a, beta):
    assert tri.lambda1_tri(a, beta) == pytest.approx(tri.lambda1_tri(1.0, beta / a) / a ** 2, rel=1e-10)


@given(st.floats(0.01, 100.0))
def test_lame_equivalence(beta):
    t = tri.t1_root(beta)
    diff = t * SQ3 / beta
    assert tri.lambda1_tri(1.0, beta) == pytest.approx(4.0 / 3.0 * diff ** 2, rel=1e-14)


@given(st.floats(1e-3, 200.0))
def test_beta_of_lambda_round_trip(beta):
    assert tri.beta_of_lambda_tri(tri.lambda1_tri(1.0, beta)) == pytest.approx(beta, rel=1e-9)


def test_splice_point():
    lam = tri.SPLICE_SQRT_LAMBDA ** 2
    assert tri.beta_of_lambda_tri(lam) == pytest.approx(tri.SPLICE_BETA, rel=1e-15)
    assert tri.lambda1_tri(1.0, tri.SPLICE_BETA) == pytest.approx(lam, rel=1e-12)
    assert tri.beta_of_lambda_tri(tri.LAMBDA_B0) == 0.0
    with pytest.raises(DomainError):
        tri.beta_of_lambda_tri(50.0)


def test_ode_matches_root():
    betas, lams = tri.lambda1_tri_ode(2.0, steps=4)
    for b, l in zip(betas, lams):
        assert l == pytest.approx(tri.lambda1_tri(1.0, b), rel=1e-6)


@pytest.mark.parametrize("beta", [0.0, 0.05, 0.7, 5.0])
def test_mode_solves_the_problem(beta):
    lam = tri.lambda1_tri(1.0, beta)
    pde, bc = oracles.triangle_mode_residuals(lambda x, y: tri.mode1(x, y, beta), lam, beta)
    assert pde < 1e-5 and bc < 1e-7


def test_mode_gradient():
    x, y, h = np.array([0.1, -0.3]), np.array([0.5, 0.2]), 1e-6
    gx, gy = tri.mode1_grad(x, y, 0.4)
    np.testing.assert_allclose(gx, (tri.mode1(x + h, y, 0.4) - tri.mode1(x - h, y, 0.4)) / (2 * h), rtol=1e-7)
    np.testing.assert_allclose(gy, (tri.mode1(x, y + h, 0.4) - tri.mode1(x, y - h, 0.4)) / (2 * h), rtol=1e-7)


@pytest.mark.parametrize("beta", [0.0, 0.1, 1.0, 10.0, 100.0])
def test_disk_comparisons(beta):
    a = math.sqrt(math.pi / SQ3)
    assert tri.q_steady_tri(a, beta) < disk.q_steady_disk(1.0, beta)
    assert tri.lambda1_tri(a, beta) > disk.lambda1_disk(1.0, beta)
    # the mode weight never exceeds the whole steady flux
    assert 0 < tri.mode1_weight_tri(a, beta) < tri.q_steady_tri(a, beta)


def test_domain_errors():
    with pytest.raises(DomainError):
        tri.lambda1_tri(0.0, 1.0)
    with pytest.raises(DomainError):
        tri.q_steady_tri(1.0, -1.0)
    with pytest.raises(DomainError):
        tri.t1_root(0.0)
