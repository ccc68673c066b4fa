"""Tour of the pulse-sequence filter functions.

A polarization-flip train divides the fiber into segments of alternating
toggling sign, and the dephasing it admits at frequency w is captured by
the filter function F(wL).  Free evolution passes everything below
w ~ 1/L; a spin echo kills the static component; CPMG trains push the
passband up to the pulse rate, which is what makes fast trains protect
entanglement against low-frequency noise.

Run:  python3 demos/01_filter_functions.py
"""

import numpy as np

from fiberdd import (CpmgCount, SpinEcho, filter_cpmg_closed, filter_free,
                     filter_generic, filter_spin_echo, sequence_filter)

LENGTH = 10.0


def show_toggling_frame():
    print("Toggling frame for CPMG-4 over L = 10")
    seq = CpmgCount(4)
    print(f"  flip positions: {seq.positions(LENGTH)}")
    probes = np.linspace(0.5, 9.5, 10)
    signs = [f"{seq.sign_at(l, LENGTH):+.0f}" for l in probes]
    print(f"  sign at l = {probes}: {' '.join(signs)}")
    print()


def show_low_frequency_suppression():
    print("Low-frequency suppression (the decoupling mechanism)")
    omega = np.array([1e-3, 1e-2, 1e-1])
    rows = {
        "free": filter_free(LENGTH, omega),
        "spin echo": filter_spin_echo(LENGTH, omega),
        "CPMG-8": sequence_filter(CpmgCount(8), LENGTH, omega),
    }
    print(f"  {'w':>8} " + "".join(f"{name:>14}" for name in rows))
    for i, w in enumerate(omega):
        cells = "".join(f"{rows[name][i]:14.3e}" for name in rows)
        print(f"  {w:8.0e} {cells}")
    print("  Free grows as (wL)^2/2, the echo as (wL)^4/32: each pulse")
    print("  steepens the low-frequency rolloff, so slow birefringence")
    print("  drift contributes almost nothing once the train is fast.")
    print()


def show_closed_form_agreement():
    print("Closed CPMG form vs the generic segment sum")
    omega = np.logspace(-2, 1.5, 2000)
    for n in (2, 7, 16):
        closed = filter_cpmg_closed(n, LENGTH, omega)
        generic = filter_generic(CpmgCount(n).positions(LENGTH), LENGTH,
                                 omega)
        gap = np.max(np.abs(closed - generic)
                     / np.maximum(np.abs(generic), 1e-30))
        print(f"  N = {n:2d}: worst relative gap {gap:.2e} over "
              f"{omega.size} frequencies")
    print("  The closed form hands near-singular frequencies (where its")
    print("  denominator cosine vanishes) back to the generic sum, which")
    print("  is finite everywhere.")
    print()


def show_passband_migration():
    print("The filter passband opens at the pulse rate")
    omega = np.logspace(-2, 2, 20000)
    for seq, label in ((SpinEcho(), "echo"), (CpmgCount(4), "CPMG-4"),
                       (CpmgCount(16), "CPMG-16")):
        values = sequence_filter(seq, LENGTH, omega)
        opens = omega[int(np.argmax(values >= 1.0))]
        n = getattr(seq, "n_pulses", 1)
        print(f"  {label:8s} reaches F = 1 at w = {opens:5.2f} "
              f"(pulse rate N pi/L = {n * np.pi / LENGTH:5.2f})")
    print("  Below its opening frequency a train transmits almost no")
    print("  noise power; faster trains push that edge upward, which is")
    print("  the whole decoupling mechanism.")


if __name__ == "__main__":
    show_toggling_frame()
    show_low_frequency_suppression()
    show_closed_form_agreement()
    show_passband_migration()
