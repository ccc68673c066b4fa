"""Sweeps: decoherence curves, sudden-death length, pulse budgets."""

import numpy as np
import pytest

from fiberdd.dephasing import SpectralProfile, coherence_factor, \
    overlap_integral
from fiberdd.evolution import (decoherence_curve, esd_length,
                               min_pulses_for_target, refine_esd,
                               sweep_positions)
from fiberdd.noise import NoiseSpectrum
from fiberdd.sequences import CpmgDensity, Free, SpinEcho
from fiberdd.states import (apply_dephasing, bell_state, concurrence,
                            mixed_third_state, werner_state)

SPEC = NoiseSpectrum(0.008, 1.0, 1e-3, 1e3)
PROF = SpectralProfile(1.0, 0.1)
STATE = mixed_third_state()


def test_curve_consistent_with_pointwise_route():
    lengths = np.linspace(1.0, 12.0, 6)
    curve = decoherence_curve(Free(), SPEC, PROF, STATE, lengths)
    assert curve.converged.all()
    for i, L in enumerate(lengths):
        f = overlap_integral(Free(), SPEC, L)
        assert curve.overlap[i] == f
        assert curve.gamma[i] == coherence_factor(f, PROF)
        assert curve.concurrence[i] == concurrence(
            apply_dephasing(STATE, curve.gamma[i]))


def test_curve_gamma_in_unit_interval_and_decreasing_for_free():
    curve = decoherence_curve(Free(), SPEC, PROF, STATE,
                              np.linspace(0.5, 15.0, 10))
    assert np.all((curve.gamma > 0.0) & (curve.gamma <= 1.0))
    assert np.all(np.diff(curve.gamma) < 0.0)


def test_curve_without_noise_is_flat():
    quiet = NoiseSpectrum(0.0, 1.0, 1e-3, 1e3)
    curve = decoherence_curve(Free(), quiet, PROF, STATE,
                              np.linspace(1.0, 20.0, 5))
    assert np.all(curve.gamma == 1.0)
    assert np.all(curve.concurrence == curve.concurrence[0])


def test_curve_input_validation():
    with pytest.raises(ValueError):
        decoherence_curve(Free(), SPEC, PROF, STATE, np.array([]))
    with pytest.raises(ValueError):
        decoherence_curve(Free(), SPEC, PROF, STATE, np.array([0.0, 1.0]))


def test_density_sweep_degrades_to_free_before_first_pulse():
    assert sweep_positions(CpmgDensity(0.06), 2.0).size == 0
    assert sweep_positions(CpmgDensity(0.06), 30.0).size == 2
    short = decoherence_curve(CpmgDensity(0.06), SPEC, PROF, STATE,
                              np.array([2.0]))
    free = decoherence_curve(Free(), SPEC, PROF, STATE, np.array([2.0]))
    assert short.gamma[0] == free.gamma[0]


def test_free_death_length_frozen_value():
    esd = esd_length(Free(), SPEC, PROF, STATE, 50.0)
    assert esd == pytest.approx(9.9266, abs=2e-3)


def test_spin_echo_death_length_frozen_value():
    esd = esd_length(SpinEcho(), SPEC, PROF, STATE, 50.0)
    assert esd == pytest.approx(28.052, abs=5e-3)


def test_death_length_none_when_window_too_short():
    assert esd_length(Free(), SPEC, PROF, STATE, 5.0) is None


def test_death_length_rejects_separable_state():
    with pytest.raises(ValueError):
        esd_length(Free(), SPEC, PROF, werner_state(0.2), 50.0)


def test_death_at_refined_point_brackets():
    esd = esd_length(Free(), SPEC, PROF, STATE, 50.0)
    from fiberdd.evolution import concurrence_at
    assert concurrence_at(Free(), SPEC, PROF, STATE, esd + 0.01) == 0.0
    assert concurrence_at(Free(), SPEC, PROF, STATE, esd - 0.01) > 0.0


def test_refine_esd_validates_bracket():
    with pytest.raises(ValueError):
        refine_esd(Free(), SPEC, PROF, STATE, 5.0, 4.0, tol=1e-4)


def test_bell_state_never_dies():
    # pure dephasing only drives Bell concurrence asymptotically to zero
    assert esd_length(Free(), SPEC, PROF, bell_state(), 30.0) is None


def test_min_pulses_frozen_value():
    budget = min_pulses_for_target(0.25, 20.0, SPEC, PROF, STATE)
    assert budget.required == 4
    assert np.array_equal(budget.pulse_counts, np.arange(5))
    assert budget.concurrence[-1] >= 0.25
    assert np.all(budget.concurrence[:-1] < 0.25)


def test_min_pulses_unreachable_within_budget():
    budget = min_pulses_for_target(0.3, 20.0, SPEC, PROF, STATE,
                                   max_pulses=1)
    assert budget.required is None
    assert budget.pulse_counts.size == 2


def test_min_pulses_target_validation():
    with pytest.raises(ValueError):
        min_pulses_for_target(0.5, 20.0, SPEC, PROF, STATE)  # above C(0)
    with pytest.raises(ValueError):
        min_pulses_for_target(0.0, 20.0, SPEC, PROF, STATE)
    with pytest.raises(ValueError):
        min_pulses_for_target(1.5, 20.0, SPEC, PROF, STATE)
