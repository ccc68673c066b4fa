"""Filter functions: closed forms vs the generic complex-sum evaluation."""

import numpy as np
import pytest

from fiberdd.filters import (filter_cpmg_closed, filter_fixed_density,
                             filter_free, filter_generic, filter_spin_echo,
                             sequence_filter)
from fiberdd.sequences import CpmgCount, SpinEcho

L = 50.0


def _avoid_zeros(w, n_pulses, length, margin=1e-6):
    """Nudge frequencies sitting within ``margin`` of a denominator zero."""
    out = w.copy()
    k = np.arange(int(out.max() * length / (np.pi * n_pulses)) + 2)
    zeros = n_pulses * np.pi * (2 * k + 1) / length
    for z in zeros:
        close = np.abs(out - z) <= margin
        out[close] = z + 2 * margin
    return out


def test_free_matches_stated_form():
    w = np.concatenate([np.logspace(-8, 2, 300), [0.0], -np.logspace(-2, 1, 50)])
    f = filter_generic(np.empty(0), L, w)
    assert np.all(np.abs(f - 2.0 * np.sin(0.5 * w * L) ** 2) < 1e-12)
    assert np.all(np.abs(filter_free(L, w) - f) < 1e-12)


def test_spin_echo_closed_form():
    w = np.logspace(-3, 2, 200)
    g = filter_generic(SpinEcho().positions(L), L, w)
    c = filter_spin_echo(L, w)
    assert np.allclose(g, c, rtol=1e-9, atol=1e-30)


@pytest.mark.parametrize("n", [1, 2, 4, 8, 16])
def test_cpmg_closed_vs_generic(n):
    w = _avoid_zeros(np.logspace(-2, 2, 200), n, L)
    g = filter_generic(CpmgCount(n).positions(L), L, w)
    c = filter_cpmg_closed(n, L, w)
    mask = g > 0.0
    assert np.all(np.abs(c[mask] / g[mask] - 1.0) < 1e-9)


def test_cpmg_finite_at_denominator_zeros():
    for n in (2, 5, 16):
        zeros = n * np.pi * (2 * np.arange(4) + 1) / L
        g = filter_generic(CpmgCount(n).positions(L), L, zeros)
        c = filter_cpmg_closed(n, L, zeros)
        assert np.all(np.isfinite(g)) and np.all(np.isfinite(c))
        assert np.allclose(c, g, rtol=1e-9)


def test_fixed_density_matches_train_at_even_integer_nl():
    n, length = 0.2, 20.0  # n*L = 4 pulses
    w = np.logspace(-2, 1.5, 200)
    fd = filter_fixed_density(n, length, w)
    g = filter_generic(CpmgCount(4).positions(length), length, w)
    mask = g > 1e-250
    assert np.all(np.abs(fd[mask] / g[mask] - 1.0) < 1e-9)


def test_fixed_density_deviates_at_odd_integer_nl():
    # the continuum form keeps sin^2(wL/2) where the exact odd-N train
    # carries cos^2; they genuinely disagree
    n, length = 0.2, 15.0  # n*L = 3 pulses
    w = np.logspace(-1, 1, 100)
    fd = filter_fixed_density(n, length, w)
    g = filter_generic(CpmgCount(3).positions(length), length, w)
    assert np.max(np.abs(fd - g)) > 0.1


def test_filter_nonnegative_and_zero_at_dc():
    w = np.linspace(-20.0, 20.0, 401)
    for pos in (np.empty(0), SpinEcho().positions(L),
                CpmgCount(6).positions(L)):
        f = filter_generic(pos, L, w)
        assert np.all(f >= 0.0)
    assert filter_generic(CpmgCount(3).positions(L), L, 0.0) == 0.0


def test_scalar_round_trip():
    f = filter_free(2.0, 1.3)
    assert isinstance(f, float)
    assert filter_generic(np.empty(0), 2.0, 1.3) == pytest.approx(f, rel=1e-14)
    assert isinstance(filter_cpmg_closed(4, 2.0, 1.3), float)


def test_sequence_filter_dispatch():
    w = np.logspace(-1, 1, 50)
    assert np.array_equal(sequence_filter(CpmgCount(4), L, w),
                          filter_generic(CpmgCount(4).positions(L), L, w))


def test_position_validation():
    with pytest.raises(ValueError):
        filter_generic(np.array([2.0, 1.0]), L, 1.0)  # not increasing
    with pytest.raises(ValueError):
        filter_generic(np.array([0.0]), L, 1.0)  # on the boundary
    with pytest.raises(ValueError):
        filter_generic(np.array([60.0]), L, 1.0)  # outside
    with pytest.raises(ValueError):
        filter_cpmg_closed(0, L, 1.0)
    with pytest.raises(ValueError):
        filter_fixed_density(-0.1, L, 1.0)
