"""Filter functions of pulse sequences.

A sequence of polarization flips reweights how much each noise frequency
contributes to dephasing.  The weight is the filter function F(w):
with toggling sign y(l) flipping at every pulse, Y(w) = int_0^L y(l)
e^{iwl} dl and F(w) = w^2 |Y(w)|^2 / 2, which for pulses at
0 < l_1 < ... < l_N < L reduces to

    F(w) = 1/2 | sum_{k=0}^{N} (-1)^k (e^{i w l_{k+1}} - e^{i w l_k}) |^2,

with l_0 = 0 and l_{N+1} = L.  The generic evaluation below is what the
overlap integral consumes; the closed forms for specific sequences serve
as cross-checks and fast previews.
"""

from __future__ import annotations

import numpy as np

from .sequences import CpmgCount

# Workspace bound for the omega-by-segment outer products.
_CHUNK_ELEMS = 2_097_152


def _as_freq_array(omega):
    w = np.asarray(omega, dtype=float)
    return w, w.ndim == 0


def _check_positions(positions: np.ndarray, length: float) -> np.ndarray:
    positions = np.asarray(positions, dtype=float)
    if not (np.isfinite(length) and length > 0.0):
        raise ValueError(f"length must be positive and finite, got {length}")
    if positions.size:
        if np.any(np.diff(positions) <= 0.0):
            raise ValueError("pulse positions must be strictly increasing")
        if positions[0] <= 0.0 or positions[-1] >= length:
            raise ValueError("pulse positions must lie strictly inside (0, length)")
    return positions


def filter_generic(positions, length: float, omega):
    """Filter function for arbitrary pulse positions.

    Each segment term is factored as 2i sin(w g_k / 2) e^{i w m_k}
    (g_k segment length, m_k segment midpoint), which keeps full relative
    accuracy in the deeply cancelling regime w*length << 1 where the
    naive complex sum loses digits.

    Parameters
    ----------
    positions : sorted pulse locations strictly inside (0, length); an
        empty array selects free evolution.
    length : total propagation length.
    omega : scalar or array of frequencies (any sign).
    """
    positions = _check_positions(positions, length)
    w, scalar = _as_freq_array(omega)
    w1 = np.atleast_1d(w).ravel()

    bounds = np.concatenate(([0.0], positions, [length]))
    gaps = np.diff(bounds)
    mids = 0.5 * (bounds[:-1] + bounds[1:])
    signs = np.where(np.arange(gaps.size) % 2, -1.0, 1.0)

    out = np.empty_like(w1)
    chunk = max(256, _CHUNK_ELEMS // gaps.size)
    for i in range(0, w1.size, chunk):
        ww = w1[i:i + chunk, None]
        amp = np.sin(0.5 * ww * gaps) * signs
        phase = ww * mids
        re = (amp * np.cos(phase)).sum(axis=1)
        im = (amp * np.sin(phase)).sum(axis=1)
        out[i:i + chunk] = 2.0 * (re * re + im * im)
    return float(out[0]) if scalar else out.reshape(w.shape)


def sequence_filter(seq, length: float, omega):
    """Generic filter evaluated at a sequence's own pulse positions."""
    return filter_generic(seq.positions(length), length, omega)


def filter_free(length: float, omega):
    """Free evolution: F(w) = 2 sin^2(w L / 2)."""
    w, scalar = _as_freq_array(omega)
    out = 2.0 * np.sin(0.5 * w * length) ** 2
    return float(out) if scalar else out


def filter_spin_echo(length: float, omega):
    """Mid-point echo: F(w) = 8 sin^4(w L / 4)."""
    w, scalar = _as_freq_array(omega)
    out = 8.0 * np.sin(0.25 * w * length) ** 4
    return float(out) if scalar else out


def filter_cpmg_closed(n_pulses: int, length: float, omega):
    """Closed-form CPMG filter for N equally spaced pulses.

    F(w) = 8 sin^4(x/4N) sin^2(x/2) / cos^2(x/2N) with x = w L for even
    N; odd N replaces sin^2(x/2) by cos^2(x/2).  The zeros of the
    denominator are removable but numerically treacherous, so points
    with |cos(x/2N)| < 1e-4 fall back to the complex-sum evaluation.
    """
    if not (isinstance(n_pulses, (int, np.integer)) and n_pulses >= 1):
        raise ValueError(f"n_pulses must be a positive integer, got {n_pulses!r}")
    w, scalar = _as_freq_array(omega)
    w1 = np.atleast_1d(w).ravel()

    x = w1 * length
    cos_sub = np.cos(x / (2.0 * n_pulses))
    envelope = np.cos(0.5 * x) if n_pulses % 2 else np.sin(0.5 * x)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = 8.0 * np.sin(x / (4.0 * n_pulses)) ** 4 * envelope ** 2 / cos_sub ** 2

    near = np.abs(cos_sub) < 1e-4
    if near.any():
        pos = CpmgCount(n_pulses).positions(length)
        out[near] = filter_generic(pos, length, w1[near])
    return float(out[0]) if scalar else out.reshape(w.shape)


def filter_fixed_density(density: float, length: float, omega):
    """Idealized fixed-density filter F(w) = 8 sin^4(w/4n) sin^2(wL/2) / cos^2(w/2n).

    This is the continuum form in which the pulse count N = n*L is not
    quantized; it coincides with the exact train filter only when n*L is
    an even integer.  Near-singular points (|cos(w/2n)| < 1e-4) are
    replaced by the complex-sum value of the realized train with
    N = max(1, round(n*L)) pulses, which keeps the output finite.
    """
    if not (np.isfinite(density) and density > 0.0):
        raise ValueError(f"density must be positive, got {density}")
    w, scalar = _as_freq_array(omega)
    w1 = np.atleast_1d(w).ravel()

    cos_sub = np.cos(w1 / (2.0 * density))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (8.0 * np.sin(w1 / (4.0 * density)) ** 4
               * np.sin(0.5 * w1 * length) ** 2 / cos_sub ** 2)

    near = np.abs(cos_sub) < 1e-4
    if near.any():
        n = max(1, int(round(density * length)))
        pos = CpmgCount(n).positions(length)
        out[near] = filter_generic(pos, length, w1[near])
    return float(out[0]) if scalar else out.reshape(w.shape)
