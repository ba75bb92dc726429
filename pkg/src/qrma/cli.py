"""Command-line front end: sweeps, dynamics, spectra, and crossings as
CSV or JSON files.

Every command is a pure function of its effective configuration: built-in
defaults, overridden by an optional JSON config file, overridden by explicit
flags.  Numbers serialize at 17 significant digits so outputs round-trip
exactly and identical configs give byte-identical files.

Exit codes: 0 success, 2 configuration or validation problems, 3 failed
convergence.
"""

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass

import numpy as np

from .dynamics import (
    InitialCondition,
    TimeGrid,
    TimeSeries,
    evolve_inversion,
    fourier_spectrum,
    prepare_dynamics,
)
from .errors import ParameterError, QrmaError
from .model import ModelParams, Parity, derive_params
from .rwa import rwa_inversion, rwa_photon_number, rwar_ground, rwar_sector_energies
from .spectrum import find_crossings, ground_state, photon_number_exact, solve_converged

DEFAULTS = {
    "big_delta": 1.0,
    "osc_delta": 1.0,
    "f_min": 0.0,
    "f_max": 1.0,
    "f_steps": 101,
    "levels": 6,
    "n_max": "auto",
    "epsilon": 5.0,
    "t_max": 100.0,
    "samples": 4096,
    "window": "none",
    "format": "csv",
    "out": "-",
    "layout": "long",
}

_INT_KEYS = {"f_steps", "levels", "samples"}
_FLOAT_KEYS = {"big_delta", "osc_delta", "f_min", "f_max", "epsilon", "t_max"}


@dataclass(frozen=True)
class RunConfig:
    """Effective parameters of one command invocation."""

    subcommand: str
    big_delta: float
    osc_delta: float
    f_min: float
    f_max: float
    f_steps: int
    levels: int
    n_max: object
    epsilon: float
    t_max: float
    samples: int
    window: str
    format: str
    out: str
    layout: str


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qrma",
        description="Spectra and dynamics of the two-level atom coupled to "
        "a field mode with the quadratic (diamagnetic) term.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    specs = {
        "spectrum": "energy levels of both parity sectors over a coupling grid",
        "ground": "ground level over a coupling grid",
        "photon": "ground-state photon number over a coupling grid",
        "dynamics": "inverse population time series at fixed coupling",
        "wspec": "Fourier magnitude of the inverse population",
        "crossings": "couplings where same-parity levels become degenerate",
    }
    for name, help_text in specs.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--big-delta", type=float, default=None)
        cmd.add_argument("--osc-delta", type=float, default=None)
        cmd.add_argument("--f-min", type=float, default=None)
        cmd.add_argument("--f-max", type=float, default=None)
        cmd.add_argument("--f-steps", type=int, default=None)
        cmd.add_argument("--levels", type=int, default=None)
        cmd.add_argument("--n-max", default=None)
        cmd.add_argument("--epsilon", type=float, default=None)
        cmd.add_argument("--t-max", type=float, default=None)
        cmd.add_argument("--samples", type=int, default=None)
        cmd.add_argument("--window", choices=("none", "hann"), default=None)
        cmd.add_argument("--format", choices=("csv", "json"), default=None)
        cmd.add_argument("--out", default=None)
        cmd.add_argument("--config", default=None)
        if name == "wspec":
            cmd.add_argument("--layout", choices=("long", "per-f"), default=None)
    return parser


def _coerce(key, value):
    if key == "n_max":
        if value == "auto":
            return "auto"
        try:
            n = int(value)
        except (TypeError, ValueError):
            raise ParameterError(f"n_max must be 'auto' or an integer, got {value!r}")
        return n
    if key in _INT_KEYS:
        return int(value)
    if key in _FLOAT_KEYS:
        return float(value)
    return value


def _effective_config(args):
    merged = dict(DEFAULTS)
    if args.config is not None:
        try:
            with open(args.config) as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParameterError(f"cannot read config {args.config}: {exc}")
        if not isinstance(loaded, dict):
            raise ParameterError("config file must hold a JSON object")
        for key, value in loaded.items():
            norm = key.replace("-", "_")
            if norm not in merged:
                raise ParameterError(f"unknown config key {key!r}")
            merged[norm] = value
    for key in merged:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    merged = {k: _coerce(k, v) for k, v in merged.items()}
    if merged["f_steps"] < 1:
        raise ParameterError(f"f_steps must be >= 1, got {merged['f_steps']}")
    if merged["levels"] < 1:
        raise ParameterError(f"levels must be >= 1, got {merged['levels']}")
    if merged["f_max"] < merged["f_min"]:
        raise ParameterError("f_max must be >= f_min")
    return RunConfig(subcommand=args.subcommand, **merged)


def _f_grid(cfg):
    if cfg.f_steps == 1:
        return np.array([cfg.f_min])
    return np.linspace(cfg.f_min, cfg.f_max, cfg.f_steps)


def _params(cfg, f):
    return ModelParams(cfg.big_delta, cfg.osc_delta, float(f))


def _fmt(x):
    return format(float(x), ".17g")


def _emit(cfg, header, rows, out_path=None):
    """Serialize rows (list of tuples) under the comma-separated header."""
    names = header.split(",")
    path = cfg.out if out_path is None else out_path
    if cfg.format == "json":

        def plain(v):
            if v is None or isinstance(v, int):
                return v
            return float(v)

        payload = [
            {name: plain(value) for name, value in zip(names, row)}
            for row in rows
        ]
        text = json.dumps(payload, indent=1) + "\n"
    else:
        lines = [header]
        for row in rows:
            lines.append(
                ",".join(
                    "" if v is None else (str(v) if isinstance(v, int) else _fmt(v))
                    for v in row
                )
            )
        text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def cmd_spectrum(cfg):
    rows = []
    for f in _f_grid(cfg):
        p = _params(cfg, f)
        for parity in (Parity.PLUS, Parity.MINUS):
            sol = solve_converged(p, parity, cfg.levels, cfg.n_max, vectors=False)
            rwar = rwar_sector_energies(p, parity, cfg.levels)
            for m in range(cfg.levels):
                rows.append(
                    (float(f), int(parity), m, sol.energies[m], rwar[m])
                )
    _emit(cfg, "f,parity,level,E_exact,E_rwar", rows)


def cmd_ground(cfg):
    rows = []
    for f in _f_grid(cfg):
        p = _params(cfg, f)
        energy, parity, _ = ground_state(p, cfg.n_max)
        rows.append((float(f), int(parity), energy, rwar_ground(p)))
    _emit(cfg, "f,parity,E_exact,E_rwar", rows)


def cmd_photon(cfg):
    rows = []
    for f in _f_grid(cfg):
        p = _params(cfg, f)
        _, _, vec = ground_state(p, cfg.n_max)
        n_exact = photon_number_exact(vec, derive_params(p).omega)
        rows.append((float(f), n_exact, rwa_photon_number(p)))
    _emit(cfg, "f,n_exact,n_rwa", rows)


def _dynamics_pair(cfg, f):
    """Exact and analytic inverse population on the configured grid."""
    p = _params(cfg, f)
    grid = TimeGrid(cfg.t_max, cfg.samples)
    proj = prepare_dynamics(p, InitialCondition(cfg.epsilon), cfg.n_max)
    exact = evolve_inversion(proj, grid)
    analytic = rwa_inversion(p, cfg.epsilon, grid.times)
    return grid, exact, analytic


def cmd_dynamics(cfg):
    # single-point command: the coupling is read from --f-min
    grid, exact, analytic = _dynamics_pair(cfg, cfg.f_min)
    rows = [
        (t, we, wr) for t, we, wr in zip(grid.times, exact.w, analytic)
    ]
    _emit(cfg, "t,w_exact,w_rwa", rows)


def cmd_wspec(cfg):
    fs = _f_grid(cfg)
    if cfg.f_steps == 1 or cfg.layout == "per-f":
        per_f_rows = {}
        for f in fs:
            grid, exact, analytic = _dynamics_pair(cfg, f)
            spec_exact = fourier_spectrum(exact, cfg.window)
            spec_rwa = fourier_spectrum(
                TimeSeries(grid=grid, w=analytic), cfg.window
            )
            per_f_rows[float(f)] = [
                (om, me, mr)
                for om, me, mr in zip(
                    spec_exact.freqs, spec_exact.mags, spec_rwa.mags
                )
            ]
        if cfg.f_steps == 1:
            _emit(cfg, "omega,mag_exact,mag_rwa", next(iter(per_f_rows.values())))
        else:
            for f, rows in per_f_rows.items():
                _emit(cfg, "omega,mag_exact,mag_rwa", rows,
                      out_path=f"{cfg.out}.f={_fmt(f)}.csv" if cfg.out != "-" else "-")
        return
    rows = []
    for f in fs:
        _, exact, _ = _dynamics_pair(cfg, f)
        spec = fourier_spectrum(exact, cfg.window)
        for om, mag in zip(spec.freqs, spec.mags):
            rows.append((float(f), om, mag))
    _emit(cfg, "f,omega,mag", rows)


def cmd_crossings(cfg):
    rows = []
    f_range = (cfg.f_min, cfg.f_max)
    base = ModelParams(cfg.big_delta, cfg.osc_delta, cfg.f_min)
    for n in range(cfg.levels):
        rwa_hits = find_crossings(base, n, f_range, cfg.f_steps, route="rwar")
        exact_hits = find_crossings(
            base, n, f_range, cfg.f_steps, route="exact", n_max=cfg.n_max
        )
        rows.append(
            (
                n,
                rwa_hits[0] if rwa_hits else None,
                exact_hits[0] if exact_hits else None,
            )
        )
    _emit(cfg, "n,f_star_rwa,f_star_exact", rows)


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "ground": cmd_ground,
    "photon": cmd_photon,
    "dynamics": cmd_dynamics,
    "wspec": cmd_wspec,
    "crossings": cmd_crossings,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _effective_config(args)
        _COMMANDS[cfg.subcommand](cfg)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QrmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
