"""Two-qubit polarization states of X form and their entanglement.

The states of interest (Bell mixtures, Werner states, and everything the
pure-dephasing channel produces from them) are X-form in the HV basis:
only the diagonal and the two anti-diagonal coherences rho14, rho23 are
nonzero.  The channel multiplies both coherences by the coherence factor
Gamma and leaves populations untouched.  Entanglement is quantified by
Wootters concurrence, available both through the general eigenvalue
construction and through the X-form closed form used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# sigma_y (x) sigma_y in the product basis; real for this pair.
_SPIN_FLIP = np.array([
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
])


class StateFileError(ValueError):
    """A density-matrix file could not be parsed or failed validation."""


@dataclass(frozen=True)
class StateViolation:
    """One failed density-matrix check with how far past the limit it is."""

    check: str
    margin: float

    def __str__(self):
        return f"{self.check} (margin {self.margin:.3e})"


@dataclass(frozen=True)
class TwoQubitXState:
    """X-form density matrix: four populations plus rho14 and rho23.

    ``diag`` orders the populations as (HH, HV, VH, VV); ``rho14`` couples
    HH with VV and ``rho23`` couples HV with VH.  Hermiticity is implicit
    in the representation, so validation only needs trace, population
    positivity, and the two coherence bounds.
    """

    diag: tuple[float, float, float, float]
    rho14: complex = 0.0j
    rho23: complex = 0.0j

    def matrix(self) -> np.ndarray:
        """Full 4x4 complex density matrix."""
        d1, d2, d3, d4 = self.diag
        rho = np.diag(np.array([d1, d2, d3, d4], dtype=complex))
        rho[0, 3] = self.rho14
        rho[3, 0] = np.conj(self.rho14)
        rho[1, 2] = self.rho23
        rho[2, 1] = np.conj(self.rho23)
        return rho


def validate_state(state: TwoQubitXState,
                   tol: float = 1e-12) -> list[StateViolation]:
    """Check trace, population positivity, and X-form positivity bounds.

    Returns an empty list for a valid state, otherwise one entry per
    failed check with its margin (how far beyond tolerance it lies).
    The coherence bounds |rho14|^2 <= rho11*rho44 and
    |rho23|^2 <= rho22*rho33 are exactly positivity of the 4x4 matrix
    for X form.
    """
    d = np.asarray(state.diag, dtype=float)
    bad = []
    trace_gap = abs(float(d.sum()) - 1.0)
    if trace_gap > tol:
        bad.append(StateViolation("trace differs from 1", trace_gap))
    for i, di in enumerate(d):
        if di < -tol:
            bad.append(StateViolation(f"population {i + 1} negative", -di))
    outer = abs(state.rho14) ** 2 - d[0] * d[3]
    if outer > tol:
        bad.append(StateViolation("|rho14|^2 exceeds rho11*rho44", outer))
    inner = abs(state.rho23) ** 2 - d[1] * d[2]
    if inner > tol:
        bad.append(StateViolation("|rho23|^2 exceeds rho22*rho33", inner))
    return bad


def apply_dephasing(state: TwoQubitXState, gamma: float) -> TwoQubitXState:
    """Pure dephasing of the traveling photon: coherences scale by gamma.

    Populations are untouched, so X form is preserved.  Composable:
    applying gamma1 then gamma2 equals applying gamma1*gamma2.
    """
    if not (0.0 < gamma <= 1.0):
        raise ValueError(f"gamma must lie in (0, 1], got {gamma}")
    return TwoQubitXState(state.diag, state.rho14 * gamma, state.rho23 * gamma)


def concurrence(state: TwoQubitXState) -> float:
    """Wootters concurrence via the spin-flip eigenvalue construction.

    Computes eigenvalues of rho (sy x sy) rho* (sy x sy); they are real
    and nonnegative up to numerical dust, which is clamped at zero.
    """
    rho = state.matrix()
    flipped = rho @ _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
    lam = np.real(np.linalg.eigvals(flipped))
    lam[lam < 0.0] = 0.0
    root = np.sqrt(np.sort(lam)[::-1])
    return max(0.0, float(root[0] - root[1] - root[2] - root[3]))


def concurrence_x_closed(state: TwoQubitXState) -> float:
    """Closed-form concurrence valid exactly for X-form states.

    C = 2 max(0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)).
    """
    d1, d2, d3, d4 = state.diag
    outer = abs(state.rho14) - np.sqrt(max(d2 * d3, 0.0))
    inner = abs(state.rho23) - np.sqrt(max(d1 * d4, 0.0))
    return 2.0 * max(0.0, float(outer), float(inner))


def esd_threshold_gamma(state: TwoQubitXState) -> float:
    """Largest coherence factor at which the dephased state is separable.

    Scaling both coherences by gamma kills entanglement exactly when
    gamma |rho14| <= sqrt(rho22 rho33) and gamma |rho23| <= sqrt(rho11 rho44),
    so the threshold is the smaller of the two ratios (infinite ratios
    from vanishing coherences drop out).  Values >= 1 mean the state is
    already separable.
    """
    d1, d2, d3, d4 = state.diag
    ratios = []
    if abs(state.rho14) > 0.0:
        ratios.append(np.sqrt(max(d2 * d3, 0.0)) / abs(state.rho14))
    if abs(state.rho23) > 0.0:
        ratios.append(np.sqrt(max(d1 * d4, 0.0)) / abs(state.rho23))
    if not ratios:
        return np.inf
    return float(min(ratios))


def bell_state() -> TwoQubitXState:
    """Maximally entangled (|HH> + |VV>)/sqrt(2)."""
    return TwoQubitXState((0.5, 0.0, 0.0, 0.5), rho14=0.5 + 0.0j)


def werner_state(p: float) -> TwoQubitXState:
    """Werner mixture p |Phi+><Phi+| + (1-p)/4 * identity."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner weight must lie in [0, 1], got {p}")
    off = (1.0 - p) / 4.0
    return TwoQubitXState((off + 0.5 * p, off, off, off + 0.5 * p),
                          rho14=0.5 * p + 0.0j)


def mixed_third_state() -> TwoQubitXState:
    """Bundled default: the partially mixed X state with concurrence 1/3.

    Populations (1/6, 1/3, 1/3, 1/6) with rho23 = 1/3; its sudden-death
    threshold sits at coherence factor 1/2, making it the reference
    initial condition for every sudden-death sweep here.
    """
    s = 1.0 / 3.0
    return TwoQubitXState((0.5 * s, s, s, 0.5 * s), rho23=s + 0.0j)


_PRESETS = {
    "paper": mixed_third_state,
    "bell": bell_state,
}


def resolve_state(selector: str) -> TwoQubitXState:
    """Turn a CLI state selector into a state.

    Accepted forms: ``paper`` (default mixed state above), ``bell``,
    ``werner:P`` with P in [0, 1], and ``file:PATH`` pointing at a
    density-matrix file (see load_state_file).
    """
    if selector in _PRESETS:
        return _PRESETS[selector]()
    if selector.startswith("werner:"):
        try:
            p = float(selector.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad Werner weight in {selector!r}") from None
        return werner_state(p)
    if selector.startswith("file:"):
        return load_state_file(selector.split(":", 1)[1])
    raise ValueError(
        f"unknown state selector {selector!r}; expected paper, bell, "
        "werner:P, or file:PATH")


def load_state_file(path) -> TwoQubitXState:
    """Read an X state from a small key = value text file.

    Recognized keys: d1 d2 d3 d4 (populations), rho14, rho23 (complex
    accepted, e.g. ``0.25+0.1j``).  Blank lines and '#' comments are
    ignored.  The parsed state must pass validate_state.
    """
    values = {"d1": 0.0, "d2": 0.0, "d3": 0.0, "d4": 0.0,
              "rho14": 0.0 + 0.0j, "rho23": 0.0 + 0.0j}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise StateFileError(f"cannot read state file {path}: {exc}") from exc

    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise StateFileError(f"{path}:{lineno}: expected key = value")
        key, _, text = (part.strip() for part in line.partition("="))
        if key not in values:
            raise StateFileError(
                f"{path}:{lineno}: unknown key {key!r} "
                f"(expected one of {sorted(values)})")
        try:
            values[key] = complex(text.replace(" ", ""))
        except ValueError:
            raise StateFileError(
                f"{path}:{lineno}: cannot parse {text!r} as a number") from None

    diag = []
    for key in ("d1", "d2", "d3", "d4"):
        v = values[key]
        if abs(v.imag) > 0.0:
            raise StateFileError(f"{path}: population {key} must be real")
        diag.append(v.real)
    state = TwoQubitXState(tuple(diag), values["rho14"], values["rho23"])
    bad = validate_state(state)
    if bad:
        raise StateFileError(
            f"{path}: invalid density matrix: " + "; ".join(map(str, bad)))
    return state
