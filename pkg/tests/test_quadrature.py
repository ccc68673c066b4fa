"""Quadrature engine against closed-form integrals."""

import numpy as np
import pytest

from fiberdd.quadrature import (QuadratureError, band_boundaries,
                                integrate_panels)


def test_polynomial_degree_22_exact():
    # the 15-point Kronrod rule integrates x^22 exactly; one panel suffices
    res = integrate_panels(lambda x: x ** 22, np.array([-1.0, 1.0]))
    assert abs(res.value - 2.0 / 23.0) < 1e-14


def test_sine_band():
    res = integrate_panels(np.sin, band_boundaries(1e-3, np.pi, 0.3))
    exact = np.cos(1e-3) + 1.0
    assert abs(res.value - exact) < 1e-12
    assert abs(res.value - exact) <= res.error + 1e-14


def test_steep_power_law_with_geometric_prefix():
    # integrand peaks six decades above its tail; the geometric edge panels
    # must carry the accuracy
    bounds = band_boundaries(1e-3, 1e3, 50.0)
    res = integrate_panels(lambda w: w ** -1.5, bounds)
    exact = 2.0 * (1e-3 ** -0.5 - 1e3 ** -0.5)
    assert abs(res.value / exact - 1.0) < 1e-10


def test_oscillatory_band():
    k = 50.0
    bounds = band_boundaries(0.5, 40.0, np.pi / k)
    res = integrate_panels(lambda x: np.cos(k * x), bounds)
    exact = (np.sin(40.0 * k) - np.sin(0.5 * k)) / k
    assert abs(res.value - exact) < 1e-12


def test_refinement_reaches_tolerance():
    # deliberately coarse initial panels; adaptivity must close the gap
    bounds = np.array([0.1, 5.0, 10.0])
    res = integrate_panels(lambda x: np.sin(3.0 * x) / x, bounds,
                           atol=1e-10, rtol=1e-10)
    ref = integrate_panels(lambda x: np.sin(3.0 * x) / x,
                           band_boundaries(0.1, 10.0, np.pi / 3.0),
                           atol=1e-12, rtol=1e-12)
    assert abs(res.value - ref.value) < 1e-8
    assert res.error <= 1e-10 + 1e-10 * abs(res.value)
    assert res.panels > 2


def test_panel_budget_error_carries_best_estimate():
    with pytest.raises(QuadratureError) as info:
        integrate_panels(lambda x: np.cos(100.0 * x), np.array([0.0, 1.0, 3.0]),
                         max_panels=4)
    err = info.value
    assert np.isfinite(err.best_estimate)
    assert err.error_estimate > 0.0
    assert err.panels >= 4


def test_boundary_validation():
    with pytest.raises(ValueError):
        integrate_panels(np.sin, np.array([1.0]))
    with pytest.raises(ValueError):
        integrate_panels(np.sin, np.array([1.0, 1.0, 2.0]))
    with pytest.raises(ValueError):
        band_boundaries(-1.0, 2.0, 0.5)
    with pytest.raises(ValueError):
        band_boundaries(1.0, 2.0, np.inf)


def test_band_boundaries_structure():
    b = band_boundaries(1e-3, 10.0, 0.25)
    assert b[0] == 1e-3 and b[-1] == 10.0
    widths = np.diff(b)
    assert np.all(widths > 0.0)
    assert widths.max() <= 0.25 + 1e-12
    # geometric growth near the lower edge
    assert widths[0] < 1e-3
