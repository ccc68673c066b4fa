"""Pulse placement policies."""

import numpy as np
import pytest

from fiberdd.sequences import (CpmgCount, CpmgDensity, Free,
                               SequenceDegenerateError, SpinEcho)


def test_free_and_se_positions():
    assert Free().positions(7.0).size == 0
    assert np.array_equal(SpinEcho().positions(7.0), [3.5])


def test_cpmg_equal_spacing_rule():
    L, N = 12.0, 5
    pos = CpmgCount(N).positions(L)
    assert np.array_equal(pos, (np.arange(1, N + 1) - 0.5) * (L / N))
    assert np.allclose(pos, (np.arange(1, N + 1) - 0.5) * L / N,
                       rtol=1e-15, atol=0)
    assert pos[0] > 0.0 and pos[-1] < L
    assert np.all(np.diff(pos) > 0.0)


def test_cpmg_symmetric_about_midpoint():
    pos = CpmgCount(8).positions(10.0)
    assert np.allclose(pos + pos[::-1], 10.0, rtol=0, atol=1e-12)


def test_cpmg_one_pulse_is_spin_echo():
    assert np.array_equal(CpmgCount(1).positions(9.0),
                          SpinEcho().positions(9.0))


def test_density_matches_count_bitwise():
    L, n = 23.0, 0.31  # round(n L) = 7
    assert np.array_equal(CpmgDensity(n).positions(L),
                          CpmgCount(7).positions(L))
    assert CpmgDensity(n).pulse_count(L) == 7


def test_density_degenerate_raises():
    with pytest.raises(SequenceDegenerateError):
        CpmgDensity(0.1).positions(2.0)


def test_sign_at_toggles_strictly_after_pulse():
    se = SpinEcho()
    assert se.sign_at(0.0, 10.0) == 1.0
    assert se.sign_at(4.999, 10.0) == 1.0
    assert se.sign_at(5.0, 10.0) == 1.0  # pulses strictly before count
    assert se.sign_at(5.001, 10.0) == -1.0
    assert se.sign_at(10.0, 10.0) == -1.0


def test_sign_at_alternates_over_cpmg_segments():
    seq = CpmgCount(4)
    L = 8.0
    mids = [0.5, 2.0, 4.0, 6.0, 7.5]  # one point inside each segment
    signs = [seq.sign_at(m, L) for m in mids]
    assert signs == [1.0, -1.0, 1.0, -1.0, 1.0]


def test_sign_at_domain():
    with pytest.raises(ValueError):
        Free().sign_at(-0.1, 1.0)
    with pytest.raises(ValueError):
        Free().sign_at(1.1, 1.0)


def test_parameter_validation():
    with pytest.raises(ValueError):
        CpmgCount(0)
    with pytest.raises(ValueError):
        CpmgCount(2).positions(0.0)
    with pytest.raises(ValueError):
        CpmgDensity(0.0)
    with pytest.raises(ValueError):
        CpmgDensity(-0.5)
    with pytest.raises(ValueError):
        SpinEcho().positions(-1.0)
