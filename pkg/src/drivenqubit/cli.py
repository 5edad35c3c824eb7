"""Command-line front end.

Subcommands: ``params`` (derived constants), ``sweep`` (one observable over
one axis, CSV out), ``figure`` (preset reproduction of the standard figure
families), ``check`` (dual-route consistency suite).

All rate flags are in units of gamma and times in units of 1/gamma.  An
optional key=value config file mirrors the flags; explicit flags win.
Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .backend import backend_name
from .params import SystemParams, ValidationError, derive
from .selfcheck import run_all
from .sweeps import (PRESET_NAMES, SweepAxis, SweepSpec, figure_preset,
                     run_sweep, sweep_columns, write_rows)

USAGE_EXIT = 1
NUMERIC_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _read_config(path: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected key = value")
        key, value = line.split("=", 1)
        out[key.strip().replace("-", "_")] = value.strip()
    return out


_PARAM_KEYS = ("lam", "omega", "delta", "delta_cav", "theta")
_FLOAT_KEYS = _PARAM_KEYS + ("tmax", "tol", "axis_min", "axis_max")
_INT_KEYS = ("points", "workers")
_STR_KEYS = ("quantity", "axis", "scale", "out", "preset")


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    if not getattr(args, "config", None):
        return args
    cfg = _read_config(args.config)
    for key, raw in cfg.items():
        if key == "lambda":
            key = "lam"
        if not hasattr(args, key):
            raise ValidationError(f"config key {key!r} does not mirror any flag")
        if getattr(args, key) is not None:
            continue  # explicit flag wins
        if key in _FLOAT_KEYS:
            setattr(args, key, float(raw))
        elif key in _INT_KEYS:
            setattr(args, key, int(raw))
        else:
            setattr(args, key, raw)
    return args


def _add_param_flags(p: argparse.ArgumentParser):
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="cavity spectral width (units of gamma)")
    p.add_argument("--omega", type=float, default=None,
                   help="qubit/classical-field coupling (units of gamma)")
    p.add_argument("--delta", type=float, default=None,
                   help="qubit/classical-field detuning (units of gamma)")
    p.add_argument("--delta-cav", dest="delta_cav", type=float, default=None,
                   help="qubit/cavity-center detuning (units of gamma)")
    p.add_argument("--theta", type=float, default=None,
                   help="initial superposition angle (radians)")
    p.add_argument("--config", default=None,
                   help="key = value file mirroring the flags; flags override")


def _params_from(args) -> SystemParams:
    return SystemParams(
        lam=args.lam if args.lam is not None else 0.01,
        omega_rabi=args.omega if args.omega is not None else 0.0,
        delta_qc=args.delta if args.delta is not None else 0.0,
        delta_cav=args.delta_cav if args.delta_cav is not None else 0.0,
        theta=args.theta if args.theta is not None else 0.0,
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="drivenqubit",
                     description="Driven qubit in a lossy cavity: dynamics, "
                                 "quantumness and memory diagnostics")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="print derived constants")
    _add_param_flags(p_params)

    p_sweep = sub.add_parser("sweep", help="sweep one observable, write CSV")
    _add_param_flags(p_sweep)
    p_sweep.add_argument("--quantity", default=None,
                         help="amplitude|decay_rate|coherence|trace_distance|"
                              "lgi3|lgi4|witness|gp|blp")
    p_sweep.add_argument("--axis", default=None,
                         help="time|tau|lambda_ratio|omega|delta|theta")
    p_sweep.add_argument("--axis-min", dest="axis_min", type=float, default=None)
    p_sweep.add_argument("--axis-max", dest="axis_max", type=float, default=None)
    p_sweep.add_argument("--points", type=int, default=None)
    p_sweep.add_argument("--scale", default=None, choices=["linear", "log"])
    p_sweep.add_argument("--tmax", type=float, default=None,
                         help="integration horizon for blp rows")
    p_sweep.add_argument("--tol", type=float, default=None,
                         help="quadrature tolerance for gp rows")
    p_sweep.add_argument("--workers", type=int, default=None)
    p_sweep.add_argument("--out", default=None, help="output CSV path")

    p_fig = sub.add_parser("figure", help="emit preset figure CSV families")
    p_fig.add_argument("--preset", default=None,
                       help=f"one of: {', '.join(PRESET_NAMES)}")
    p_fig.add_argument("--out", default=None, help="output directory")
    p_fig.add_argument("--workers", type=int, default=None)
    p_fig.add_argument("--config", default=None)

    p_check = sub.add_parser("check", help="run the dual-route consistency suite")
    p_check.add_argument("--quick", action="store_true",
                         help="reduced parameter grid")
    return parser


def _cmd_params(args) -> int:
    params = _params_from(args)
    dp = derive(params)
    print(f"gamma      = {params.gamma:.17g}")
    print(f"lambda     = {params.lam:.17g}")
    print(f"omega      = {params.omega_rabi:.17g}")
    print(f"delta      = {params.delta_qc:.17g}")
    print(f"delta_cav  = {params.delta_cav:.17g}")
    print(f"theta      = {params.theta:.17g}")
    print(f"eta        = {dp.eta:.17g}")
    print(f"omega_d    = {dp.omega_d:.17g}")
    print(f"m_const    = {dp.m_const.real:.17g}{dp.m_const.imag:+.17g}j")
    print(f"f_const    = {dp.f_const.real:.17g}{dp.f_const.imag:+.17g}j")
    print(f"tau_r      = {dp.tau_r:.17g}")
    print(f"tau_q      = {dp.tau_q:.17g}")
    if dp.omega_d > 0:
        print(f"period     = {2 * math.pi / dp.omega_d:.17g}")
    for w in dp.flags():
        print(f"warning: {w}")
    return 0


def _cmd_sweep(args, parser) -> int:
    for flag in ("quantity", "axis", "out"):
        if getattr(args, flag) is None:
            parser.error(f"--{flag} is required (flag or config)")
    axis_defaults = {
        "time": (0.0, 30.0), "tau": (0.0, 4.0), "lambda_ratio": (0.01, 1.0),
        "omega": (0.0, 2.0), "delta": (0.0, 10.0), "theta": (0.0, math.pi / 2),
    }
    if args.axis not in axis_defaults:
        parser.error(f"unknown axis {args.axis!r}")
    lo, hi = axis_defaults[args.axis]
    axis = SweepAxis(
        name=args.axis,
        start=args.axis_min if args.axis_min is not None else lo,
        stop=args.axis_max if args.axis_max is not None else hi,
        count=args.points if args.points is not None else 201,
        scale=args.scale or "linear",
    )
    spec = SweepSpec(
        quantity=args.quantity,
        fixed=_params_from(args),
        axis=axis,
        output_path=args.out,
        t_max=args.tmax if args.tmax is not None else 100.0,
        quad_tol=args.tol if args.tol is not None else 1e-9,
    )
    rows, summary = run_sweep(spec, workers=args.workers or 1)
    write_rows(args.out, rows, sweep_columns(spec))
    print(f"wrote {args.out}: {summary.n_rows} rows, {summary.n_failed} failed")
    if summary.minimum is not None:
        print(f"{spec.quantity}: min={summary.minimum:.17g} "
              f"max={summary.maximum:.17g} argmax={summary.argmax:.17g}")
    return NUMERIC_EXIT if summary.n_failed else 0


def _cmd_figure(args, parser) -> int:
    if args.preset is None:
        parser.error("--preset is required")
    if args.out is None:
        parser.error("--out is required")
    result = figure_preset(args.preset, args.out, workers=args.workers or 1)
    for path in result["files"]:
        print(f"wrote {path}")
    print(f"wrote {result['manifest']}")
    if result["n_failed"]:
        print(f"{result['n_failed']} rows failed", file=sys.stderr)
        return NUMERIC_EXIT
    return 0


def _cmd_check(args) -> int:
    results = run_all(quick=args.quick)
    failed = 0
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        print(f"[{tag}] {r.name}: {r.detail}")
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed "
          f"(backend: {backend_name()})")
    return NUMERIC_EXIT if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _merge_config(args)
        if args.command == "params":
            return _cmd_params(args)
        if args.command == "sweep":
            return _cmd_sweep(args, parser)
        if args.command == "figure":
            return _cmd_figure(args, parser)
        return _cmd_check(args)
    except ValidationError as exc:
        print(f"drivenqubit: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (ArithmeticError, RuntimeError) as exc:
        print(f"drivenqubit: numerical failure: {exc}", file=sys.stderr)
        return NUMERIC_EXIT


if __name__ == "__main__":
    sys.exit(main())
