import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from slipflow.errors import DomainError
from slipflow.modesum import (FluxSeries, Mode, completeness_area, power_tail, q_periodic_sum, q_steady_sum,
                              q_transient_sum)

MODES = st.lists(st.tuples(st.floats(0.1, 100.0), st.floats(0.0, 1.0)), min_size=1, max_size=30).map(
    lambda ms: tuple(Mode(l, w) for l, w in sorted(ms)))


@given(MODES)
def test_partial_sums_nondecreasing(modes):
    sums = [q_steady_sum(FluxSeries(modes[:k])).value for k in range(1, len(modes) + 1)]
    assert all(b >= a for a, b in zip(sums, sums[1:]))
    raws = [m.weight * m.lam for m in modes]
    areas = [completeness_area(raws[:k]).value for k in range(1, len(raws) + 1)]
    assert all(b >= a for a, b in zip(areas, areas[1:]))


@given(MODES)
def test_transient_increasing_concave(modes):
    fs = FluxSeries(modes)
    t = np.logspace(-3, 1, 50)
    q = q_transient_sum(fs, t)
    assert np.all(np.diff(q) >= -1e-14)
    tl = np.linspace(0.0, 2.0, 50)
    assert np.all(np.diff(q_transient_sum(fs, tl), 2) <= 1e-12)


@given(MODES, st.floats(0.01, 50.0))
def test_periodic_conjugate(modes, w):
    fs = FluxSeries(modes)
    assert q_periodic_sum(fs, -w) == pytest.approx(q_periodic_sum(fs, w).conjugate(), rel=1e-14, abs=1e-300)


def test_power_tail_on_known_series():
    j = np.arange(1, 401, dtype=float)
    w = j ** -4.0
    exact_tail = sum(k ** -4.0 for k in range(401, 200000))
    assert power_tail(w) == pytest.approx(exact_tail, rel=0.02)
    assert power_tail(np.ones(10)) == math.inf


def test_validation():
    with pytest.raises(DomainError):
        Mode(0.0, 1.0)
    with pytest.raises(DomainError):
        Mode(1.0, -1.0)
    with pytest.raises(DomainError):
        FluxSeries((Mode(2.0, 0.1), Mode(1.0, 0.1)))
    with pytest.raises(DomainError):
        FluxSeries((Mode(1.0, 0.5),), steady=0.1)
    with pytest.raises(DomainError):
        q_transient_sum(FluxSeries((Mode(1.0, 0.5),)), -1.0)
