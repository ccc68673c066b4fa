"""From noise spectrum to coherence: overlap integral and attenuation factor.

The dephasing a photon pair accumulates over length L condenses into a
single overlap integral between the noise spectrum and the sequence's
filter function,

    f(L) = (1/pi) * int_ir^uv S(w) F(w) / w^2 dw

(the symmetric-band integral folded onto the positive half).  Averaging
the random phase over the Gaussian noise *and* over the photon's optical
bandwidth gives the coherence factor

    Gamma = exp(-w0^2 f / (1 + s^2 f)) / sqrt(1 + s^2 f),

where w0 is the mean optical frequency and the frequency intensity
profile is Gaussian with variance s^2 / 2.  Gamma multiplies the
traveling-photon coherences of the two-qubit state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filters import filter_generic
from .noise import NoiseSpectrum
from .quadrature import QuadratureError, band_boundaries, integrate_panels


@dataclass(frozen=True)
class SpectralProfile:
    """Optical frequency profile of the traveling photon.

    Gaussian intensity profile with mean ``omega0`` and variance
    ``sigma**2 / 2`` (the convention under which the closed-form
    attenuation above holds; ``sigma = 0`` is the monochromatic limit).
    """

    omega0: float
    sigma: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.omega0) and self.omega0 > 0.0):
            raise ValueError(f"omega0 must be positive, got {self.omega0}")
        if not (np.isfinite(self.sigma) and self.sigma >= 0.0):
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")


def overlap_from_positions(positions, spectrum: NoiseSpectrum, length: float,
                           *, atol: float = 1e-8, rtol: float = 1e-8,
                           with_error: bool = False):
    """Overlap integral for explicit pulse positions.

    The quadrature starts from panels no wider than pi/length (half the
    shortest oscillation period of the filter) with a geometric prefix
    resolving the spectral edge, then refines adaptively.  The noise
    amplitude is factored out and ``atol``/``rtol`` apply to the
    unit-amplitude band integral, so the refinement path never depends
    on the amplitude and f stays exactly proportional to it.

    Returns f, or (f, error_estimate) when ``with_error`` is set.
    Raises QuadratureError (best estimate attached) on non-convergence.
    """
    if not (np.isfinite(length) and length > 0.0):
        raise ValueError(f"length must be positive and finite, got {length}")
    if spectrum.amplitude == 0.0:
        return (0.0, 0.0) if with_error else 0.0

    scale = spectrum.amplitude / np.pi
    bounds = band_boundaries(spectrum.ir_cutoff, spectrum.uv_cutoff,
                             min(np.pi / length,
                                 spectrum.uv_cutoff - spectrum.ir_cutoff))
    power = -(spectrum.exponent + 2.0)

    def integrand(w):
        return filter_generic(positions, length, w) * w ** power

    try:
        res = integrate_panels(integrand, bounds, atol=atol, rtol=rtol)
    except QuadratureError as exc:
        raise QuadratureError(
            f"overlap integral at length {length}: {exc}",
            scale * exc.best_estimate, scale * exc.error_estimate,
            exc.panels) from exc
    value = scale * res.value
    return (value, scale * res.error) if with_error else value


def overlap_integral(seq, spectrum: NoiseSpectrum, length: float,
                     *, atol: float = 1e-8, rtol: float = 1e-8,
                     with_error: bool = False):
    """Overlap integral f(L) for a pulse sequence (see module docstring).

    Nonnegative and exactly zero for zero noise amplitude.  For
    CpmgDensity sequences the length must realize at least one pulse;
    sweep helpers in the evolution module handle the shorter regime.
    """
    return overlap_from_positions(seq.positions(length), spectrum, length,
                                  atol=atol, rtol=rtol, with_error=with_error)


def coherence_factor(overlap: float, profile: SpectralProfile) -> float:
    """Coherence attenuation Gamma in (0, 1] for a given overlap value.

    Monochromatic reduction: Gamma = exp(-w0^2 f) at sigma = 0.  A finite
    optical bandwidth *weakens* dephasing whenever w0^2 f exceeds
    (1 + s^2 f)/2, which is the regime of every sudden-death crossing
    studied here.
    """
    if not (np.isfinite(overlap) and overlap >= 0.0):
        raise ValueError(f"overlap must be >= 0, got {overlap}")
    bulge = 1.0 + profile.sigma ** 2 * overlap
    return float(np.exp(-profile.omega0 ** 2 * overlap / bulge) / np.sqrt(bulge))
