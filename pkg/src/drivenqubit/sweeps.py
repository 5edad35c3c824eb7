"""Parameter/time sweeps with CSV emission and figure presets.

Output files are plain CSV: one leading comment line with the schema tag,
a header row, then data rows with floats printed at 17 significant digits.
Failed rows are never silent NaNs; they carry a status label and empty
observable cells.  See FORMATS.md for the column layout per quantity.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .amplitude import AmplitudePole, amplitude_grid, decay_rate_grid
from .nonmarkov import blp_measure
from .params import SystemParams, ValidationError, derive
from .phase import geometric_phase_detailed
from .temporal import lgi_c3, lgi_c4, witness_series

__all__ = ["SweepAxis", "SweepSpec", "SweepSummary", "run_sweep",
           "write_rows", "figure_preset", "PRESET_NAMES"]

SCHEMA_TAG = "# drivenqubit-csv 1"

QUANTITY_AXES = {
    "amplitude": {"time"},
    "decay_rate": {"time"},
    "coherence": {"time"},
    "trace_distance": {"time"},
    "lgi3": {"tau"},
    "lgi4": {"tau"},
    "witness": {"tau"},
    "gp": {"lambda_ratio", "omega", "delta", "theta"},
    "blp": {"lambda_ratio", "omega", "delta", "theta"},
}

OBSERVABLE_COLUMNS = {
    "amplitude": ("re_a", "im_a", "abs_a"),
    "decay_rate": ("decay_rate",),
    "coherence": ("c_l1",),
    "trace_distance": ("d_trace",),
    "lgi3": ("c3", "violated3"),
    "lgi4": ("c4", "violated4"),
    "witness": ("w_q", "envelope"),
    "gp": ("phi_g", "quad_err"),
    "blp": ("n_measure", "alpha_best", "residual_bound", "truncated"),
}

PARAM_COLUMNS = ("gamma", "lam", "omega_rabi", "delta_qc", "delta_cav", "theta")


@dataclass(frozen=True)
class SweepAxis:
    """Swept coordinate: evenly spaced on a linear or logarithmic scale."""

    name: str
    start: float
    stop: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        if self.name not in {"time", "tau", "lambda_ratio", "omega", "delta", "theta"}:
            raise ValidationError(f"unknown axis {self.name!r}")
        if self.count < 2:
            raise ValidationError("axis count must be >= 2")
        if not self.start < self.stop:
            raise ValidationError("axis start must be < stop")
        if self.scale not in ("linear", "log"):
            raise ValidationError("axis scale must be linear or log")
        if self.scale == "log" and self.start <= 0:
            raise ValidationError("log axis requires start > 0")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a quantity, the fixed parameters and the swept axis."""

    quantity: str
    fixed: SystemParams
    axis: SweepAxis
    output_path: str | None = None
    t_max: float = 100.0
    quad_tol: float = 1e-9
    alpha_grid: int = 91

    def __post_init__(self):
        if self.quantity not in QUANTITY_AXES:
            raise ValidationError(f"unknown quantity {self.quantity!r}")
        if self.axis.name not in QUANTITY_AXES[self.quantity]:
            raise ValidationError(
                f"quantity {self.quantity!r} cannot sweep axis {self.axis.name!r}"
            )
        if self.quantity == "witness" and self.axis.start != 0.0:
            raise ValidationError("witness sweeps must start at tau = 0 "
                                  "(the envelope needs the full history)")

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "fixed": {
                "gamma": self.fixed.gamma,
                "lam": self.fixed.lam,
                "omega_rabi": self.fixed.omega_rabi,
                "delta_qc": self.fixed.delta_qc,
                "delta_cav": self.fixed.delta_cav,
                "theta": self.fixed.theta,
            },
            "axis": {
                "name": self.axis.name,
                "start": self.axis.start,
                "stop": self.axis.stop,
                "count": self.axis.count,
                "scale": self.axis.scale,
            },
            "output_path": self.output_path,
            "t_max": self.t_max,
            "quad_tol": self.quad_tol,
            "alpha_grid": self.alpha_grid,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SweepSpec":
        return cls(
            quantity=d["quantity"],
            fixed=SystemParams(**d["fixed"]),
            axis=SweepAxis(**d["axis"]),
            output_path=d.get("output_path"),
            t_max=d.get("t_max", 100.0),
            quad_tol=d.get("quad_tol", 1e-9),
            alpha_grid=d.get("alpha_grid", 91),
        )


@dataclass
class SweepSummary:
    quantity: str
    n_rows: int
    n_failed: int
    minimum: float | None
    maximum: float | None
    argmax: float | None


def _params_at(fixed: SystemParams, axis_name: str, value: float) -> SystemParams:
    if axis_name == "lambda_ratio":
        return replace(fixed, lam=value * fixed.gamma)
    if axis_name == "omega":
        return replace(fixed, omega_rabi=value)
    if axis_name == "delta":
        return replace(fixed, delta_qc=value)
    if axis_name == "theta":
        return replace(fixed, theta=value)
    return fixed


def _param_cells(p: SystemParams) -> dict:
    return {
        "gamma": p.gamma, "lam": p.lam, "omega_rabi": p.omega_rabi,
        "delta_qc": p.delta_qc, "delta_cav": p.delta_cav, "theta": p.theta,
    }


def _time_series_rows(spec: SweepSpec) -> list[dict]:
    dp = derive(spec.fixed)
    ts = spec.axis.values()
    rows = []
    base = _param_cells(spec.fixed)
    if spec.quantity == "amplitude":
        A, _ = amplitude_grid(dp, ts)
        for t, a in zip(ts, A):
            rows.append(base | {spec.axis.name: t, "re_a": a.real, "im_a": a.imag,
                                "abs_a": abs(a), "status": "ok"})
    elif spec.quantity == "decay_rate":
        g = decay_rate_grid(dp, ts)
        for t, v in zip(ts, g):
            if math.isnan(v):
                rows.append(base | {spec.axis.name: t, "decay_rate": None,
                                    "status": "pole"})
            else:
                rows.append(base | {spec.axis.name: t, "decay_rate": v,
                                    "status": "ok"})
    elif spec.quantity == "coherence":
        A, _ = amplitude_grid(dp, ts)
        scale = abs(math.sin(2.0 * spec.fixed.theta))
        for t, a in zip(ts, A):
            rows.append(base | {spec.axis.name: t, "c_l1": scale * abs(a),
                                "status": "ok"})
    elif spec.quantity == "trace_distance":
        # evolved distance of the equatorial antipodal pair: |A(t)|
        A, _ = amplitude_grid(dp, ts)
        for t, a in zip(ts, A):
            rows.append(base | {spec.axis.name: t, "d_trace": abs(a),
                                "status": "ok"})
    elif spec.quantity in ("lgi3", "lgi4"):
        fn = lgi_c3 if spec.quantity == "lgi3" else lgi_c4
        for t in ts:
            r = fn(dp, spec.fixed.theta, float(t))
            if spec.quantity == "lgi3":
                rows.append(base | {spec.axis.name: t, "c3": r.c3,
                                    "violated3": int(r.violated3), "status": "ok"})
            else:
                rows.append(base | {spec.axis.name: t, "c4": r.c4,
                                    "violated4": int(r.violated4), "status": "ok"})
    elif spec.quantity == "witness":
        w, env = witness_series(dp, spec.fixed.theta, ts)
        for t, wv, ev in zip(ts, w, env):
            rows.append(base | {spec.axis.name: t, "w_q": wv, "envelope": ev,
                                "status": "ok"})
    else:  # pragma: no cover
        raise ValidationError(f"not a time-series quantity: {spec.quantity}")
    return rows


def _scalar_row(spec: SweepSpec, value: float) -> dict:
    p = _params_at(spec.fixed, spec.axis.name, float(value))
    base = _param_cells(p) | {spec.axis.name: float(value)}
    try:
        if spec.quantity == "gp":
            dp = derive(p)
            phi, err, _ = geometric_phase_detailed(dp, p.theta, spec.quad_tol)
            return base | {"phi_g": phi, "quad_err": err, "status": "ok"}
        # extend the horizon until the backflow gains (which die off with the
        # amplitude envelope exp(-lam t / 2)) are converged, within a cap
        t_eff = max(spec.t_max, min(5000.0, 2.0 * math.log(1e4) / p.lam))
        result = blp_measure(p, t_max=t_eff, alpha_grid=spec.alpha_grid)
        return base | {
            "n_measure": result.n_measure,
            "alpha_best": result.alpha,
            "residual_bound": result.residual_bound,
            "truncated": int(result.truncated),
            "status": "ok",
        }
    except (ValidationError, AmplitudePole) as exc:
        label = "undefined-period" if "period" in str(exc) else "invalid"
        cols = {c: None for c in OBSERVABLE_COLUMNS[spec.quantity]}
        return base | cols | {"status": label}


def run_sweep(spec: SweepSpec, workers: int = 1):
    """Evaluate the sweep; returns (rows, summary), rows in axis order."""
    if spec.quantity in ("gp", "blp"):
        values = spec.axis.values()
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(_scalar_row, [spec] * len(values), values))
        else:
            rows = [_scalar_row(spec, v) for v in values]
    else:
        rows = _time_series_rows(spec)
    key = OBSERVABLE_COLUMNS[spec.quantity][0]
    good = [(r[spec.axis.name], r[key]) for r in rows
            if r["status"] == "ok" and r[key] is not None]
    n_failed = sum(1 for r in rows if r["status"] != "ok")
    if good:
        vals = np.array([v for _, v in good], dtype=float)
        summary = SweepSummary(spec.quantity, len(rows), n_failed,
                               float(vals.min()), float(vals.max()),
                               float(good[int(vals.argmax())][0]))
    else:
        summary = SweepSummary(spec.quantity, len(rows), n_failed, None, None, None)
    return rows, summary


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def write_rows(path, rows: list[dict], columns: list[str]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write(SCHEMA_TAG + "\n")
        writer = csv.writer(fh)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(row.get(c)) for c in columns])


def sweep_columns(spec: SweepSpec, extra: tuple[str, ...] = ()) -> list[str]:
    return (list(extra) + list(PARAM_COLUMNS) + [spec.axis.name]
            + list(OBSERVABLE_COLUMNS[spec.quantity]) + ["status"])


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------

_LGI_TAU = SweepAxis("tau", 0.0, 4.0, 801)
_COH_TIME = SweepAxis("time", 0.0, 50.0, 1001)
_WIT_TAU = SweepAxis("tau", 0.0, 50.0, 2001)
_GAMMA_TIME = SweepAxis("time", 0.0, 30.0, 1201)
_LAM_AXIS = SweepAxis("lambda_ratio", 0.01, 1.0, 41, "log")
_LAM_AXIS_BLP = SweepAxis("lambda_ratio", 0.01, 1.0, 21, "log")
_DELTA_AXIS = SweepAxis("delta", 0.0, 10.0, 41)

OMEGA_FAMILY = (0.0, 0.1, 0.5, 1.0, 2.0)
DELTA_FAMILY = (0.0, 0.1, 1.0, 10.0)


def _p(lam=0.01, omega=0.0, delta=0.0, theta=0.0):
    return SystemParams(lam=lam, omega_rabi=omega, delta_qc=delta, theta=theta)


def _preset_table() -> dict:
    """Panel layout per figure preset.

    Families not fully enumerated in the source material use the values
    named in its discussion; the emitted manifest records every parameter
    set so callers can override.
    """
    presets: dict[str, list] = {}
    # LGI vs drive strength (four curves) and vs detuning
    presets["fig2"] = [
        ("c3", "omega_rabi",
         [SweepSpec("lgi3", _p(omega=om), _LGI_TAU) for om in (0.0, 0.5, 1.0, 2.0)]),
        ("c4", "omega_rabi",
         [SweepSpec("lgi4", _p(omega=om), _LGI_TAU) for om in (0.0, 0.5, 1.0, 2.0)]),
    ]
    presets["fig3"] = [
        ("c3", "delta_qc",
         [SweepSpec("lgi3", _p(omega=0.1, delta=d), _LGI_TAU) for d in DELTA_FAMILY]),
        ("c4", "delta_qc",
         [SweepSpec("lgi4", _p(omega=0.1, delta=d), _LGI_TAU) for d in DELTA_FAMILY]),
    ]
    presets["fig4"] = [
        ("coherence", "omega_rabi",
         [SweepSpec("coherence", _p(omega=om, theta=math.pi / 4), _COH_TIME)
          for om in OMEGA_FAMILY]),
    ]
    presets["fig5"] = [
        ("a_witness", "omega_rabi",
         [SweepSpec("witness", _p(omega=om, theta=math.pi / 4), _WIT_TAU)
          for om in (0.0, 0.1, 0.5, 1.0)]),
        ("b_witness", "delta_qc",
         [SweepSpec("witness", _p(omega=0.1, delta=d, theta=math.pi / 4), _WIT_TAU)
          for d in DELTA_FAMILY]),
    ]
    presets["fig6"] = [
        ("decay_rate", "omega_rabi",
         [SweepSpec("decay_rate", _p(omega=om, theta=math.pi / 4), _GAMMA_TIME)
          for om in OMEGA_FAMILY]),
    ]
    # geometric phase: the undriven resonant point has no dressed period, so
    # the drive family starts at the smallest nonzero coupling
    presets["fig7"] = [
        ("gp", "omega_rabi",
         [SweepSpec("gp", _p(omega=om, theta=math.pi / 6), _LAM_AXIS)
          for om in (0.01, 0.05, 0.1, 0.3, 0.5, 1.0)]),
    ]
    presets["fig8"] = [
        ("gp", "delta_qc",
         [SweepSpec("gp", _p(omega=0.1, delta=d, theta=math.pi / 6), _LAM_AXIS)
          for d in DELTA_FAMILY]),
    ]
    presets["fig9"] = [
        (f"{chr(ord('a') + i)}_blp", "omega_rabi",
         [SweepSpec("blp", _p(omega=om, delta=d), _LAM_AXIS_BLP)
          for om in OMEGA_FAMILY])
        for i, d in enumerate(DELTA_FAMILY)
    ]
    presets["fig10"] = [
        ("blp", "omega_rabi",
         [SweepSpec("blp", _p(omega=om), _DELTA_AXIS)
          for om in (0.01, 0.1, 0.5, 1.0)]),
    ]
    return presets


PRESET_NAMES = tuple(sorted(_preset_table().keys(), key=lambda s: int(s[3:])))


def figure_preset(name: str, outdir, workers: int = 1) -> dict:
    """Emit the CSV files and manifest for one figure preset.

    Returns {"files": [paths...], "manifest": path, "n_failed": int}.
    """
    table = _preset_table()
    if name not in table:
        raise ValidationError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    files = []
    manifest_entries = []
    n_failed = 0
    for panel, curve_key, specs in table[name]:
        rows_all = []
        for spec in specs:
            rows, summary = run_sweep(spec, workers=workers)
            curve_value = getattr(spec.fixed, curve_key)
            for r in rows:
                rows_all.append({"curve": curve_value} | r)
            n_failed += summary.n_failed
            manifest_entries.append({
                "panel": panel,
                "curve_key": curve_key,
                "curve_value": curve_value,
                "spec": spec.to_dict(),
            })
        path = outdir / f"{name}_{panel}.csv"
        write_rows(path, rows_all, sweep_columns(specs[0], extra=("curve",)))
        files.append(str(path))
    manifest_path = outdir / f"{name}_manifest.json"
    with open(manifest_path, "w") as fh:
        json.dump({"figure": name, "schema": 1, "sweeps": manifest_entries},
                  fh, indent=2, sort_keys=True)
        fh.write("\n")
    return {"files": files, "manifest": str(manifest_path), "n_failed": n_failed}
