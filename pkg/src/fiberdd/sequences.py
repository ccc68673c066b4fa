"""Pulse placement policies along the fiber.

A sequence here is a rule mapping a propagation length L to the ordered
positions of polarization-flip (half-wave) elements inside (0, L).  Four
policies are provided: free evolution, a single mid-point echo, and
equally spaced trains specified either by pulse count or by linear pulse
density.  Positions follow the equal-spacing rule l_k = (k - 1/2) L / N,
which never places an element at the fiber end itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class SequenceDegenerateError(ValueError):
    """Fixed-density placement quantizes to zero pulses at this length."""


def _check_length(length: float) -> None:
    if not (np.isfinite(length) and length > 0.0):
        raise ValueError(f"length must be positive and finite, got {length}")


def _equal_spaced(n_pulses: int, length: float) -> np.ndarray:
    return (np.arange(1, n_pulses + 1) - 0.5) * (length / n_pulses)


class PulseSequence:
    """Base policy: subclasses define positions(length)."""

    def positions(self, length: float) -> np.ndarray:
        raise NotImplementedError

    def sign_at(self, position: float, length: float) -> float:
        """Toggling-frame sign at a point: (-1)**(pulses strictly before it)."""
        if not 0.0 <= position <= length:
            raise ValueError(
                f"position {position} outside the fiber [0, {length}]")
        flips = np.searchsorted(self.positions(length), position, side="left")
        return -1.0 if flips % 2 else 1.0


@dataclass(frozen=True)
class Free(PulseSequence):
    """No pulses: bare dephasing accumulation."""

    def positions(self, length: float) -> np.ndarray:
        _check_length(length)
        return np.empty(0)


@dataclass(frozen=True)
class SpinEcho(PulseSequence):
    """Single flip at the fiber midpoint."""

    def positions(self, length: float) -> np.ndarray:
        _check_length(length)
        return np.array([0.5 * length])


@dataclass(frozen=True)
class CpmgCount(PulseSequence):
    """CPMG train with a fixed number of pulses regardless of length."""

    n_pulses: int

    def __post_init__(self):
        if not (isinstance(self.n_pulses, (int, np.integer)) and self.n_pulses >= 1):
            raise ValueError(
                f"n_pulses must be a positive integer, got {self.n_pulses!r}")

    def positions(self, length: float) -> np.ndarray:
        _check_length(length)
        return _equal_spaced(self.n_pulses, length)


@dataclass(frozen=True)
class CpmgDensity(PulseSequence):
    """CPMG train with a fixed linear pulse density.

    The realized count is N = round(density * length) (ties follow
    Python's round-half-to-even), so hardware with a per-unit-length
    pulse budget is modeled directly.  Lengths short enough that N
    rounds to zero raise SequenceDegenerateError; sweep helpers treat
    that regime as free evolution instead.
    """

    density: float

    def __post_init__(self):
        if not (np.isfinite(self.density) and self.density > 0.0):
            raise ValueError(f"density must be positive, got {self.density}")

    def pulse_count(self, length: float) -> int:
        _check_length(length)
        return int(round(self.density * length))

    def positions(self, length: float) -> np.ndarray:
        n = self.pulse_count(length)
        if n == 0:
            raise SequenceDegenerateError(
                f"density {self.density} gives zero pulses at length {length}; "
                "use Free() for the unpulsed regime")
        return _equal_spaced(n, length)
