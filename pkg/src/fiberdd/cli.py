"""Command-line front end.

Subcommands: ``simulate`` (one decoherence curve to CSV plus a summary
line), ``figure`` (multi-series preset sweeps), ``mc-check`` (Monte
Carlo vs analytic coherence factor), and ``validate-config``.  Every run
prints the fully resolved configuration as '# key = value' lines, and
the same lines head each CSV file, so any result is reproducible from
its log or output alone.

Exit codes: 0 success, 2 usage or configuration error, 3 numerical
non-convergence, 4 I/O error, 5 Monte Carlo z-score failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import config as cfg
from .dephasing import coherence_factor, overlap_from_positions
from .evolution import decoherence_curve, refine_esd
from .montecarlo import McSettings, auto_resolution, mc_coherence, \
    validate_settings, z_score
from .noise import NoiseSpectrum
from .quadrature import QuadratureError
from .sequences import CpmgCount, CpmgDensity, Free, SequenceDegenerateError, \
    SpinEcho

FIG2A_DENSITIES = (0.1, 0.2, 0.4)
FIG3_LENGTH = 50.0
FIG3_MAX_PULSES = 64
FIG4_ALPHAS = (0.5, 0.75, 1.0, 1.25, 1.5)
FIG4_DENSITY = FIG2A_DENSITIES[1]  # fig2a middle density

_FLAG_KEYS = tuple(cfg._PARSERS)


def _fmt(value) -> str:
    """One CSV cell: '.'-decimal, 17 significant digits for floats."""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _write_csv(path: str, comments: list[str], header: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for line in comments:
            fh.write(line + "\n")
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(cell) for cell in row) + "\n")


def _resolve(args, overrides: dict | None = None) -> cfg.SimulationConfig:
    file_values = cfg.load_config_file(args.config) if args.config else None
    flag_values = {key: getattr(args, key) for key in _FLAG_KEYS
                   if hasattr(args, key)}
    return cfg.resolve(overrides, file_values, flag_values)


def _print_resolved(lines: list[str]) -> None:
    for line in lines:
        print(line)


def _curve_rows(curve):
    for i in range(curve.lengths.size):
        yield (curve.lengths[i], curve.overlap[i], curve.gamma[i],
               curve.concurrence[i])


def _summary_esd(seq, spectrum, profile, state, curve, length_max):
    """Death length refined from the curve's first dead grid point."""
    dead = np.flatnonzero(curve.concurrence == 0.0)
    if dead.size == 0:
        return None
    i = int(dead[0])
    lo = curve.lengths[i - 1] if i > 0 else curve.lengths[0] * 1e-9
    return refine_esd(seq, spectrum, profile, state, lo, curve.lengths[i],
                      tol=1e-7 * length_max)


def _cmd_simulate(args) -> int:
    config = _resolve(args)
    seq, spectrum, profile, state = cfg.build_runtime(config)
    cfg.ensure_state_valid(state)
    lines = cfg.resolved_lines(config)
    _print_resolved(lines)

    curve = decoherence_curve(seq, spectrum, profile, state,
                              cfg.length_grid(config))
    out = config.out or "simulate.csv"
    _write_csv(out, lines, "L,f_L,gamma,concurrence", _curve_rows(curve))

    esd = _summary_esd(seq, spectrum, profile, state, curve,
                       config.length_max)
    print(f"esd_length = {'none' if esd is None else _fmt(esd)}; "
          f"final_concurrence = {_fmt(curve.concurrence[-1])}; "
          f"csv = {out}")
    if not curve.converged.all():
        print(f"warning: {int((~curve.converged).sum())} unconverged "
              "quadrature points (best estimates written)", file=sys.stderr)
        return 3
    return 0


def _figure_series(preset: str, config: cfg.SimulationConfig, spectrum):
    """(series label, sequence, spectrum, lengths) tuples for one preset."""
    grid = cfg.length_grid(config)
    if preset == "fig2a":
        series = [("free", Free(), spectrum, grid)]
        series += [(f"density={n:g}", CpmgDensity(n), spectrum, grid)
                   for n in FIG2A_DENSITIES]
        return series
    if preset == "fig2b":
        return [("free", Free(), spectrum, grid),
                ("se", SpinEcho(), spectrum, grid)]
    if preset == "fig3":
        grid3 = np.array([FIG3_LENGTH])
        series = [("N=0", Free(), spectrum, grid3)]
        series += [(f"N={n}", CpmgCount(n), spectrum, grid3)
                   for n in range(1, FIG3_MAX_PULSES + 1)]
        return series
    if preset == "fig4":
        series = []
        for alpha in FIG4_ALPHAS:
            spec_a = NoiseSpectrum(spectrum.amplitude, alpha,
                                   spectrum.ir_cutoff, spectrum.uv_cutoff)
            series.append((f"alpha={alpha:g}", CpmgDensity(FIG4_DENSITY),
                           spec_a, grid))
        return series
    raise cfg.ConfigError(f"unknown figure preset {preset!r}")


def _cmd_figure(args) -> int:
    config = _resolve(args)
    _, spectrum, profile, state = cfg.build_runtime(config)
    cfg.ensure_state_valid(state)

    extras = {"preset": args.preset}
    if args.preset == "fig3":
        extras["fig3_length"] = FIG3_LENGTH
        extras["fig3_max_pulses"] = FIG3_MAX_PULSES
    if args.preset == "fig4":
        extras["fig4_sequence"] = f"cpmg density={FIG4_DENSITY:g}"
    lines = cfg.resolved_lines(config, **extras)
    _print_resolved(lines)

    out_dir = config.out or "."
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{args.preset}.csv")

    rows = []
    all_converged = True
    for label, seq, spec, grid in _figure_series(args.preset, config,
                                                 spectrum):
        curve = decoherence_curve(seq, spec, profile, state, grid)
        all_converged &= bool(curve.converged.all())
        for row in _curve_rows(curve):
            rows.append((label,) + row)
    _write_csv(path, lines, "series,L,f_L,gamma,concurrence", rows)
    print(f"csv = {path}")
    if not all_converged:
        print("warning: unconverged quadrature points present",
              file=sys.stderr)
        return 3
    return 0


def _cmd_mc_check(args) -> int:
    config = _resolve(args, overrides=dict(cfg.MC_CHECK_OVERRIDES))
    seq, spectrum, profile, state = cfg.build_runtime(config)
    length = config.length_max
    try:
        positions = seq.positions(length)
    except SequenceDegenerateError as exc:
        raise cfg.ConfigError(f"sequence: {exc}") from exc

    settings = McSettings(trials=config.trials, seed=config.seed,
                          resolution=auto_resolution(positions, length,
                                                     spectrum))
    problems = validate_settings(positions, length, spectrum, settings)
    if problems:
        raise cfg.ConfigError("\n".join("mc: " + p for p in problems))

    lines = cfg.resolved_lines(config, mc_length=length,
                               mc_resolution=settings.resolution,
                               mc_frequency_modes=settings.frequency_modes)
    _print_resolved(lines)

    analytic = coherence_factor(
        overlap_from_positions(positions, spectrum, length), profile)
    result = mc_coherence(seq, spectrum, profile, length, settings)
    z = z_score(result, analytic)

    print(f"analytic_gamma = {_fmt(analytic)}")
    print(f"mc_estimate = {_fmt(result.estimate)}")
    print(f"mc_std_error = {_fmt(result.std_error)}")
    print(f"z = {_fmt(z)}")
    print(f"imag_mean = {_fmt(result.imag_mean)}")
    print(f"imag_std_error = {_fmt(result.imag_std_error)}")
    print(f"trials = {result.trials}")
    return 5 if abs(z) > 4.0 else 0


def _cmd_validate_config(args) -> int:
    config = _resolve(args)
    _, _, _, state = cfg.build_runtime(config)
    cfg.ensure_state_valid(state)
    _print_resolved(cfg.resolved_lines(config))
    print("configuration ok")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="key = value config file; flags override it")
    common.add_argument("--sequence", choices=("free", "se", "cpmg"),
                        help="pulse sequence (cpmg needs --pulses or --density)")
    common.add_argument("--pulses", type=int, metavar="N",
                        help="fixed CPMG pulse count")
    common.add_argument("--density", type=float, metavar="X",
                        help="CPMG pulses per unit length")
    common.add_argument("--alpha", type=float, help="spectral exponent in [0, 2]")
    common.add_argument("--noise-amp", type=float, dest="noise_amp",
                        help="noise amplitude (0 disables noise)")
    common.add_argument("--ir-cutoff", type=float, dest="ir_cutoff",
                        help="lower spectral cutoff")
    common.add_argument("--uv-cutoff", type=float, dest="uv_cutoff",
                        help="upper spectral cutoff")
    common.add_argument("--omega0", type=float, help="mean photon frequency")
    common.add_argument("--sigma", type=float,
                        help="optical bandwidth parameter (0 = monochromatic)")
    common.add_argument("--length-max", type=float, dest="length_max",
                        help="sweep end (simulate/figure) or evaluation "
                             "length (mc-check)")
    common.add_argument("--grid-points", type=int, dest="grid_points",
                        help="number of sweep lengths")
    common.add_argument("--state", metavar="SEL",
                        help="paper | bell | werner:P | file:PATH")
    common.add_argument("--trials", type=int, help="Monte Carlo trials")
    common.add_argument("--seed", type=int, help="Monte Carlo root seed")
    common.add_argument("--out", metavar="PATH",
                        help="CSV path (simulate) or output directory (figure)")

    parser = argparse.ArgumentParser(
        prog="fiberdd",
        description="Entanglement decay and dynamical decoupling of "
                    "photon pairs in a noisy birefringent fiber.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[common],
                       help="decoherence curve for one configuration")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("figure", parents=[common],
                       help="multi-series preset sweeps")
    p.add_argument("preset", choices=("fig2a", "fig2b", "fig3", "fig4"))
    p.set_defaults(handler=_cmd_figure)

    p = sub.add_parser("mc-check", parents=[common],
                       help="Monte Carlo vs analytic coherence factor")
    p.set_defaults(handler=_cmd_mc_check)

    p = sub.add_parser("validate-config", parents=[common],
                       help="resolve and validate, then exit")
    p.set_defaults(handler=_cmd_validate_config)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.handler(args)
    except cfg.ConfigError as exc:
        print(f"config error:\n{exc}", file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"config error:\n{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
