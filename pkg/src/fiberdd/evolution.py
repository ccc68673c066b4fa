"""Entanglement evolution along the fiber.

Sweep-level machinery tying the lower layers together: attenuation
curves C(L) for a sequence, the sudden-death length where entanglement
hits exactly zero at finite L, and the minimum pulse budget reaching a
concurrence target at a given length.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dephasing import SpectralProfile, coherence_factor, overlap_from_positions
from .noise import NoiseSpectrum
from .quadrature import QuadratureError
from .sequences import CpmgCount, Free, SequenceDegenerateError
from .states import TwoQubitXState, apply_dephasing, concurrence


@dataclass
class DecoherenceCurve:
    """Per-length overlap, coherence factor, and concurrence of a sweep.

    ``converged`` flags quadrature success; failed points keep the best
    available estimate rather than poisoning the whole sweep.
    """

    lengths: np.ndarray
    overlap: np.ndarray
    gamma: np.ndarray
    concurrence: np.ndarray
    converged: np.ndarray


def sweep_positions(seq, length: float) -> np.ndarray:
    """Pulse positions for sweep use: a fixed-density train too short to
    realize its first pulse degrades gracefully to free evolution."""
    try:
        return seq.positions(length)
    except SequenceDegenerateError:
        return np.empty(0)


def _overlap_at(seq, spectrum: NoiseSpectrum, length: float) -> tuple[float, bool]:
    try:
        return overlap_from_positions(sweep_positions(seq, length),
                                      spectrum, length), True
    except QuadratureError as exc:
        return exc.best_estimate, False


def coherence_at(seq, spectrum: NoiseSpectrum, profile: SpectralProfile,
                 length: float) -> float:
    """Coherence factor of a sequence at one length."""
    f, _ = _overlap_at(seq, spectrum, length)
    return coherence_factor(f, profile)


def concurrence_at(seq, spectrum: NoiseSpectrum, profile: SpectralProfile,
                   state: TwoQubitXState, length: float) -> float:
    """Concurrence of the dephased state at one length."""
    return concurrence(apply_dephasing(state, coherence_at(
        seq, spectrum, profile, length)))


def decoherence_curve(seq, spectrum: NoiseSpectrum, profile: SpectralProfile,
                      state: TwoQubitXState, lengths) -> DecoherenceCurve:
    """Evaluate overlap, coherence factor, and concurrence over lengths.

    Lengths must be positive; each point is independent (pure functions
    all the way down), so failures are per-point.
    """
    lengths = np.asarray(lengths, dtype=float)
    if lengths.ndim != 1 or lengths.size == 0:
        raise ValueError("lengths must be a nonempty 1-D array")
    if np.any(lengths <= 0.0) or not np.all(np.isfinite(lengths)):
        raise ValueError("lengths must be positive and finite")

    overlap = np.empty(lengths.size)
    gamma = np.empty(lengths.size)
    conc = np.empty(lengths.size)
    ok = np.empty(lengths.size, dtype=bool)
    for i, length in enumerate(lengths):
        overlap[i], ok[i] = _overlap_at(seq, spectrum, length)
        gamma[i] = coherence_factor(overlap[i], profile)
        conc[i] = concurrence(apply_dephasing(state, gamma[i]))
    return DecoherenceCurve(lengths, overlap, gamma, conc, ok)


def esd_length(seq, spectrum: NoiseSpectrum, profile: SpectralProfile,
               state: TwoQubitXState, length_max: float, *,
               grid_points: int = 200) -> float | None:
    """Smallest length in (0, length_max] where concurrence reaches zero.

    Scans a uniform grid for the first dead point, then bisects the
    bracketing interval (concurrence hits zero exactly at finite length,
    so the predicate is a clean boolean).  Returns None when the state
    stays entangled over the whole grid.  The initial state itself must
    be entangled.
    """
    if not (np.isfinite(length_max) and length_max > 0.0):
        raise ValueError(f"length_max must be positive, got {length_max}")
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")
    if concurrence(state) <= 0.0:
        raise ValueError("initial state is separable; no death length exists")

    def dead(length: float) -> bool:
        return concurrence_at(seq, spectrum, profile, state, length) == 0.0

    grid = np.linspace(0.0, length_max, grid_points + 1)[1:]
    hit = None
    for length in grid:
        if dead(length):
            hit = length
            break
    if hit is None:
        return None

    lo = hit - length_max / grid_points
    if lo <= 0.0:
        lo = hit * 1e-9
    return refine_esd(seq, spectrum, profile, state, lo, hit,
                      tol=1e-7 * length_max)


def refine_esd(seq, spectrum: NoiseSpectrum, profile: SpectralProfile,
               state: TwoQubitXState, alive_length: float,
               dead_length: float, *, tol: float) -> float:
    """Bisect a bracket (alive_length, dead_length] down to the death point.

    Assumes a single alive-to-dead transition inside the bracket, which
    holds whenever the coherence factor is monotone there.
    """
    if not 0.0 < alive_length < dead_length:
        raise ValueError("need 0 < alive_length < dead_length")
    lo, hi = alive_length, dead_length
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if concurrence_at(seq, spectrum, profile, state, mid) == 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass
class PulseBudget:
    """Outcome of a minimum-pulse scan.

    ``required`` is the smallest pulse count meeting the target, or None
    if none does within the budget; the arrays record every count
    examined (0 = free evolution) with its concurrence, so the scan
    doubles as a growth curve.
    """

    required: int | None
    pulse_counts: np.ndarray
    concurrence: np.ndarray


def min_pulses_for_target(target: float, length: float,
                          spectrum: NoiseSpectrum, profile: SpectralProfile,
                          state: TwoQubitXState, *,
                          max_pulses: int = 512) -> PulseBudget:
    """Minimum CPMG pulse count whose concurrence at ``length`` reaches
    ``target``.

    Concurrence is not assumed monotone in the pulse count, so the scan
    walks N = 0, 1, 2, ... upward and stops at the first success, which
    is therefore minimal.  Raises ValueError if the target exceeds the
    initial concurrence (unreachable by a decohering channel).
    """
    if not (0.0 < target <= 1.0):
        raise ValueError(f"target must lie in (0, 1], got {target}")
    if target > concurrence(state):
        raise ValueError(
            f"target {target} exceeds the initial concurrence "
            f"{concurrence(state):.6g}; dephasing cannot increase it")
    if max_pulses < 0:
        raise ValueError("max_pulses must be nonnegative")

    counts, values = [], []
    required = None
    for n in range(max_pulses + 1):
        seq = Free() if n == 0 else CpmgCount(n)
        c = concurrence_at(seq, spectrum, profile, state, length)
        counts.append(n)
        values.append(c)
        if c >= target:
            required = n
            break
    return PulseBudget(required, np.array(counts), np.array(values))
