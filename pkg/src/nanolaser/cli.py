"""Command-line front end: single-point evaluation, pump sweeps, time
integration and figure presets, all emitting CSV.

Configuration comes from a JSON document (--config); individual flags
override config fields.  Numbers are written with Python's shortest
round-trip float representation, so identical inputs always produce
byte-identical output, independent of the number of workers.

Exit codes: 0 success, 2 configuration/validation error, 3 numerical
failure (non-convergence, non-finite state, step underflow, pole).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import lre, semiconductor, statistics, two_level
from .errors import NanolaserError, NumericalError, ParameterError, RegimeError
from .integrator import IntegrationConfig, default_config, integrate
from .params import DimensionlessParams, LaserParams, derive, from_dimensionless

MODELS = ("glre", "glre_no_ce", "lre", "semiconductor")
CORE_OUTPUTS = ("n", "delta", "C", "g2")
ALLOWED_OUTPUTS = ("n", "delta", "n_e", "C", "g2", "beta", "beta_c")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_PHYSICAL_KEYS = {
    "omega0", "f", "n_emitters", "kappa", "gamma_par", "gamma_perp",
    "gamma_d", "pump_dependent_dephasing",
}
_DIMENSIONLESS_KEYS = {
    "g", "ratio_2k_gp", "n_emitters", "dth_over_n0", "kappa_over_gpar",
    "gamma_d", "pump_dependent_dephasing",
}


class ConfigError(ParameterError):
    """Invalid or unreadable CLI configuration."""


def _fmt(value) -> str:
    """Shortest round-trip decimal for floats; empty string for None."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _as_float(value, name: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{name} must be a number (got {value!r})") from exc


def _write_csv(stream, header, rows):
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(_fmt(v) for v in row) + "\n")


def load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config parse error in {path!r} at byte offset {exc.pos} "
            f"(line {exc.lineno}, column {exc.colno}): {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a JSON object")
    return doc


def params_from_dict(raw: dict, pump_dephasing_flag: bool = False) -> LaserParams:
    """Build LaserParams from a config 'params' object.

    Two shapes are accepted: physical rates (keyed by 'omega0') or
    dimensionless ratios (keyed by 'g', converted with kappa = 1).  The
    pump-dependent-dephasing flag may come from the object itself or the
    command line and requires gamma_d.
    """
    try:
        return _params_from_dict(raw, pump_dephasing_flag)
    except KeyError as exc:
        raise ConfigError(f"'params' is missing required field {exc}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ConfigError(f"malformed 'params' object: {exc}") from exc


def _params_from_dict(raw: dict, pump_dephasing_flag: bool) -> LaserParams:
    if not isinstance(raw, dict):
        raise ConfigError("'params' must be a JSON object")
    pdd = bool(raw.get("pump_dependent_dephasing", False)) or pump_dephasing_flag
    if "omega0" in raw:
        unknown = set(raw) - _PHYSICAL_KEYS
        if unknown:
            raise ConfigError(
                f"unknown physical parameter field(s): {sorted(unknown)}"
            )
        return LaserParams(
            omega0=float(raw["omega0"]),
            f=float(raw.get("f", 1.0)),
            n_emitters=int(raw["n_emitters"]),
            kappa=float(raw["kappa"]),
            gamma_par=float(raw["gamma_par"]),
            gamma_perp=(
                float(raw["gamma_perp"]) if raw.get("gamma_perp") is not None else None
            ),
            gamma_d=float(raw.get("gamma_d", 0.0)),
            pump_dependent_dephasing=pdd,
        )
    if "g" in raw:
        unknown = set(raw) - _DIMENSIONLESS_KEYS
        if unknown:
            raise ConfigError(
                f"unknown dimensionless parameter field(s): {sorted(unknown)}"
            )
        dp = DimensionlessParams(
            g=float(raw["g"]),
            ratio_2k_gp=float(raw["ratio_2k_gp"]),
            n_emitters=int(raw["n_emitters"]),
            dth_over_n0=(
                float(raw["dth_over_n0"]) if raw.get("dth_over_n0") is not None else None
            ),
            kappa_over_gpar=(
                float(raw["kappa_over_gpar"])
                if raw.get("kappa_over_gpar") is not None
                else None
            ),
        )
        params = from_dimensionless(dp)
        if pdd:
            params = dataclasses.replace(
                params,
                gamma_d=float(raw.get("gamma_d", 0.0)),
                pump_dependent_dephasing=True,
            )
        return params
    raise ConfigError(
        "'params' must contain either 'omega0' (physical rates) or 'g' "
        "(dimensionless ratios)"
    )


def pump_grid_values(lo: float, hi: float, count: int, spacing: str) -> list[float]:
    """Ascending pump grid; 'log' spacing requires lo > 0."""
    if count < 2:
        raise ConfigError(f"pump grid count must satisfy >= 2 (got {count!r})")
    if not lo < hi:
        raise ConfigError(f"pump grid requires min < max (got {lo!r}, {hi!r})")
    if spacing not in ("linear", "log"):
        raise ConfigError(f"pump grid spacing must be 'linear' or 'log' (got {spacing!r})")
    if spacing == "log":
        if lo <= 0:
            raise ConfigError(f"log pump spacing requires min > 0 (got {lo!r})")
        step = math.log(hi / lo) / (count - 1)
        return [lo * math.exp(i * step) for i in range(count)]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


# ----------------------------------------------------------------------
# record evaluation (top level so sweep tasks can cross process borders)

def evaluate_record(model: str, params: LaserParams, pump: float) -> dict:
    """One sweep row: stationary outputs of the requested model at pump P."""
    if model == "glre":
        n = two_level.stationary_n(pump, params)
        level = two_level.stationary_inversion(pump, params)
        c = two_level.c_factor(level, params, pump)
        g2 = statistics.g2_two_level(n, params, pump)
        warn = ""
    elif model == "glre_no_ce":
        d = derive(params, pump)
        n, level = two_level.stationary_constant_coupling(
            pump, d.g_c, d.delta_th * (1.0 + d.ratio_2k_gp), params
        )
        c = None
        g2 = statistics.g2_two_level(n, params, pump)
        warn = ""
    elif model == "lre":
        state = lre.lre_stationary(pump, params)
        n, level = state.n, state.delta
        c = None
        g2 = statistics.g2_two_level(n, params, pump)
        warn = ""
    elif model == "semiconductor":
        n = semiconductor.semi_stationary_n(pump, params)
        level = semiconductor.semi_stationary_ne(pump, params)
        c = None
        g2 = statistics.g2_semiconductor(n, params, pump)
        warn = "ne_exceeds_n0" if level > params.n_emitters else ""
    else:
        raise ConfigError(f"unknown model {model!r}; expected one of {MODELS}")
    return {
        "pump": pump,
        "n": n,
        "level": level,
        "C": c,
        "g2": g2,
        "model": model,
        "warnings": warn,
        "beta": lre.beta(params, pump),
        "beta_c": lre.beta_c(params, pump),
    }


def _sweep_task(task):
    model, params, pump = task
    return evaluate_record(model, params, pump)


def record_header(model: str, outputs) -> list[str]:
    level_name = "n_e" if model == "semiconductor" else "delta"
    header = ["pump", "n", level_name, "c_factor", "g2", "model", "warnings"]
    for extra in ("beta", "beta_c"):
        if extra in outputs:
            header.append(extra)
    return header


def record_row(rec: dict, model: str, outputs) -> list:
    want = set(outputs)
    level_key = "n_e" if model == "semiconductor" else "delta"
    row = [
        rec["pump"],
        rec["n"] if "n" in want else None,
        rec["level"] if level_key in want or "delta" in want else None,
        rec["C"] if "C" in want else None,
        rec["g2"] if "g2" in want else None,
        rec["model"],
        rec["warnings"],
    ]
    for extra in ("beta", "beta_c"):
        if extra in outputs:
            row.append(rec[extra])
    return row


def _resolve_outputs(cfg: dict) -> list[str]:
    outputs = cfg.get("outputs")
    if outputs is None:
        return list(CORE_OUTPUTS)
    if not isinstance(outputs, list) or not all(isinstance(o, str) for o in outputs):
        raise ConfigError("'outputs' must be a list of output names")
    bad = [o for o in outputs if o not in ALLOWED_OUTPUTS]
    if bad:
        raise ConfigError(
            f"unknown output(s) {bad}; allowed: {list(ALLOWED_OUTPUTS)}"
        )
    return outputs


def _resolve_model(args, cfg: dict) -> str:
    model = args.model or cfg.get("model")
    if model is None:
        raise ConfigError("a model is required (--model or config 'model')")
    if model not in MODELS:
        raise ConfigError(f"unknown model {model!r}; expected one of {MODELS}")
    return model


def _resolve_params(args, cfg: dict) -> LaserParams:
    raw = cfg.get("params")
    if raw is None:
        raise ConfigError("config must provide a 'params' object")
    return params_from_dict(raw, pump_dephasing_flag=args.pump_dephasing)


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


# ----------------------------------------------------------------------
# subcommands

def cmd_steady(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    model = _resolve_model(args, cfg)
    params = _resolve_params(args, cfg)
    outputs = _resolve_outputs(cfg)
    pump = args.pump if args.pump is not None else cfg.get("pump")
    if pump is None:
        raise ConfigError("a pump value is required (--pump or config 'pump')")
    rec = evaluate_record(model, params, _as_float(pump, "pump"))
    stream, close = _open_out(args.out)
    try:
        _write_csv(stream, record_header(model, outputs), [record_row(rec, model, outputs)])
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _default_pump_grid(params: LaserParams) -> dict:
    d = derive(params, 0.0)
    if d.lasing:
        return {
            "min": 1e-2 * d.p_th,
            "max": 1e2 * d.p_th,
            "count": 200,
            "spacing": "log",
        }
    return {"min": 0.0, "max": 100.0, "count": 200, "spacing": "linear"}


def _resolve_pump_grid(args, cfg: dict, params: LaserParams) -> list[float]:
    grid = dict(cfg.get("pump_grid") or _default_pump_grid(params))
    flags_given = any(
        getattr(args, name, None) is not None
        for name in ("pump_min", "pump_max", "pump_count")
    )
    if flags_given and "pump_grid" not in cfg:
        # an explicit flag-defined range starts from linear spacing rather
        # than inheriting the log default of the implicit threshold bracket
        grid["spacing"] = "linear"
    if getattr(args, "pump_min", None) is not None:
        grid["min"] = args.pump_min
    if getattr(args, "pump_max", None) is not None:
        grid["max"] = args.pump_max
    if getattr(args, "pump_count", None) is not None:
        grid["count"] = args.pump_count
    if getattr(args, "pump_log", False):
        grid["spacing"] = "log"
    try:
        return pump_grid_values(
            float(grid["min"]), float(grid["max"]), int(grid["count"]),
            str(grid.get("spacing", "linear")),
        )
    except KeyError as exc:
        raise ConfigError(f"pump_grid is missing field {exc}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ConfigError(f"malformed pump_grid: {exc}") from exc


def run_sweep(model, params, pumps, workers=1):
    """Evaluate one record per pump, in ascending pump order.

    Points are independent pure evaluations; with workers > 1 they fan out
    over a process pool and are gathered back in submission order, so the
    result is identical whatever the worker count.
    """
    tasks = [(model, params, p) for p in pumps]
    if workers > 1:
        chunk = max(1, len(tasks) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_task, tasks, chunksize=chunk))
    return [_sweep_task(t) for t in tasks]


def cmd_sweep(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    model = _resolve_model(args, cfg)
    params = _resolve_params(args, cfg)
    outputs = _resolve_outputs(cfg)
    pumps = _resolve_pump_grid(args, cfg, params)
    workers = args.workers if args.workers is not None else int(cfg.get("workers", 1))
    if workers < 1:
        raise ConfigError(f"workers must satisfy >= 1 (got {workers!r})")
    records = run_sweep(model, params, pumps, workers)
    stream, close = _open_out(args.out)
    try:
        _write_csv(
            stream,
            record_header(model, outputs),
            [record_row(r, model, outputs) for r in records],
        )
    finally:
        if close:
            stream.close()
    return EXIT_OK


_INTEGRATE_COLUMNS = {
    "glre": ("t", "n", "sigma", "d_corr", "delta"),
    "semiconductor": ("t", "n", "sigma", "d_corr", "n_e"),
    "lre": ("t", "n", "delta"),
}


def _resolve_integration_config(args, cfg: dict, params: LaserParams) -> IntegrationConfig:
    base = default_config(params.kappa, params.gamma_par)
    raw = dict(cfg.get("integration", {}))
    merged = {
        "dt_initial": raw.get("dt_initial", base.dt_initial),
        "t_max": raw.get("t_max", base.t_max),
        "abs_tol": raw.get("abs_tol"),
        "rel_tol": raw.get("rel_tol"),
        "steady_state_tol": raw.get("steady_state_tol", base.steady_state_tol),
        "max_steps": raw.get("max_steps", base.max_steps),
    }
    if args.dt is not None:
        merged["dt_initial"] = args.dt
    if args.t_max is not None:
        merged["t_max"] = args.t_max
    if args.abs_tol is not None:
        merged["abs_tol"] = args.abs_tol
    if args.rel_tol is not None:
        merged["rel_tol"] = args.rel_tol
    if args.steady_tol is not None:
        merged["steady_state_tol"] = args.steady_tol
    if args.max_steps is not None:
        merged["max_steps"] = args.max_steps
    try:
        return IntegrationConfig(
            dt_initial=float(merged["dt_initial"]),
            t_max=float(merged["t_max"]),
            abs_tol=None if merged["abs_tol"] is None else float(merged["abs_tol"]),
            rel_tol=None if merged["rel_tol"] is None else float(merged["rel_tol"]),
            steady_state_tol=float(merged["steady_state_tol"]),
            max_steps=int(merged["max_steps"]),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ConfigError(f"malformed integration settings: {exc}") from exc


def cmd_integrate(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    model = _resolve_model(args, cfg)
    if model not in _INTEGRATE_COLUMNS:
        raise ConfigError(
            f"model {model!r} has no time-domain form; "
            f"expected one of {sorted(_INTEGRATE_COLUMNS)}"
        )
    params = _resolve_params(args, cfg)
    pump = args.pump if args.pump is not None else cfg.get("pump")
    if pump is None:
        raise ConfigError("a pump value is required (--pump or config 'pump')")
    pump = _as_float(pump, "pump")
    config = _resolve_integration_config(args, cfg, params)

    if model == "glre":
        rhs = two_level.glre_flow(params, pump)
        initial = two_level.dark_state(params).as_tuple()
    elif model == "semiconductor":
        rhs = semiconductor.semi_flow(params, pump)
        initial = semiconductor.empty_state().as_tuple()
    else:
        rhs = lre.lre_flow(params, pump)
        initial = (0.0, -float(params.n_emitters))

    traj = integrate(rhs, initial, config, record_stride=args.stride)
    header = list(_INTEGRATE_COLUMNS[model]) + ["converged"]
    last = len(traj.times) - 1
    rows = []
    for i, (t, state) in enumerate(zip(traj.times, traj.states)):
        flag = ("true" if traj.converged else "false") if i == last else ""
        rows.append([t, *state, flag])
    stream, close = _open_out(args.out)
    try:
        _write_csv(stream, header, rows)
    finally:
        if close:
            stream.close()
    return EXIT_OK


# ----------------------------------------------------------------------
# figure presets

_FIG2_RATIOS = (0.01, 1.0, 3.0, 6.0)
_FIG3_N0_DTH = (100.0, 50.0)
_FIG3_GP_2K = (0.1, 1.0, 10.0)
_FIG4_DTH = (0.9, 0.5, 0.1, 0.005)
_PRESET_POINTS = 200
_PRESET_N0 = 10_000


def _preset_sweep_files(prefix, model_list, params, pumps, outputs, meta):
    files = []
    for model, label in model_list:
        records = run_sweep(model, params, pumps)
        rows = [record_row(r, model, outputs) for r in records]
        files.append(
            {
                "path": f"{prefix}_{label}.csv",
                "header": record_header(model, outputs),
                "rows": rows,
                "meta": {**meta, "model": model, "curve": label},
            }
        )
    return files


def _dimensionless_meta(g, ratio, dth, n0):
    return {
        "g": g,
        "ratio_2k_gp": ratio,
        "dth_over_n0": dth,
        "n_emitters": n0,
        "note": "n_emitters is an artifact choice; stationary outputs "
                "depend on it only through dth_over_n0",
    }


def _figure_fig1b():
    dp = DimensionlessParams(
        g=0.048, ratio_2k_gp=2.5, n_emitters=_PRESET_N0, kappa_over_gpar=25.0
    )
    params = from_dimensionless(dp)
    d = derive(params)
    pumps = pump_grid_values(1e-2 * d.p_th, 1e2 * d.p_th, _PRESET_POINTS, "log")
    meta = {
        "g": dp.g, "ratio_2k_gp": dp.ratio_2k_gp,
        "kappa_over_gpar": dp.kappa_over_gpar, "n_emitters": dp.n_emitters,
        "dth_over_n0": d.d_th, "p_th": d.p_th,
    }
    files = _preset_sweep_files(
        "fig1b",
        [("glre", "glre"), ("glre_no_ce", "no_ce"), ("lre", "lre")],
        params, pumps, CORE_OUTPUTS, meta,
    )
    c_rows = [
        [p, two_level.c_factor(two_level.stationary_inversion(p, params), params, p)]
        for p in pumps
    ]
    files.append(
        {
            "path": "fig1b_cfactor.csv",
            "header": ["pump", "c_factor"],
            "rows": c_rows,
            "meta": {**meta, "curve": "collective factor along the sweep "
                                      "(lower panel)"},
        }
    )
    return files, "photon output vs pump with and without collective effects"


def _fig2_files(prefix):
    files = []
    for ratio in _FIG2_RATIOS:
        dp = DimensionlessParams(
            g=2.0 / 3.0, ratio_2k_gp=ratio, n_emitters=_PRESET_N0,
            dth_over_n0=0.01,
        )
        params = from_dimensionless(dp)
        d = derive(params)
        pumps = pump_grid_values(1e-2 * d.p_th, 1e2 * d.p_th, _PRESET_POINTS, "log")
        meta = _dimensionless_meta(dp.g, ratio, dp.dth_over_n0, dp.n_emitters)
        files += _preset_sweep_files(
            prefix, [("glre", f"2k_gp_{ratio:g}")], params, pumps, CORE_OUTPUTS, meta
        )
    return files


def _figure_fig2a():
    return _fig2_files("fig2a"), "photon output vs pump while varying 2k/gamma_perp"


def _figure_fig2b():
    return _fig2_files("fig2b"), "autocorrelation g2 vs pump while varying 2k/gamma_perp"


def _figure_fig3a():
    files = []
    n_step = math.log(1e4 / 1e-6) / (_PRESET_POINTS - 1)
    n_grid = [1e-6 * math.exp(i * n_step) for i in range(_PRESET_POINTS)]
    for r in _FIG3_N0_DTH:
        for x in _FIG3_GP_2K:
            rows = [[n, statistics.g2_two_level_value(n, x, r)] for n in n_grid]
            files.append(
                {
                    "path": f"fig3a_n0dth_{r:g}_gp2k_{x:g}.csv",
                    "header": ["n", "g2"],
                    "rows": rows,
                    "meta": {
                        "n0_over_dth": r, "gp_over_2k": x,
                        "n_grid": "200 log-spaced points, 1e-6..1e4 "
                                  "(artifact choice)",
                    },
                }
            )
    return files, "autocorrelation g2 vs photon number"


def _figure_fig3b():
    count = 200
    x_step = math.log(1e2 / 1e-2) / (count - 1)
    r_step = math.log(1e3 / 1e-1) / (count - 1)
    rows = []
    for i in range(count):
        x = 1e-2 * math.exp(i * x_step)
        for j in range(count):
            r = 1e-1 * math.exp(j * r_step)
            rows.append([x, r, statistics.g2_two_level_value(0.0, x, r)])
    files = [
        {
            "path": "fig3b_grid.csv",
            "header": ["gp_over_2k", "n0_over_dth", "g2_at_n0"],
            "rows": rows,
            "meta": {
                "grid": "200x200 log-spaced; gp_over_2k in [1e-2, 1e2], "
                        "n0_over_dth in [1e-1, 1e3] (resolution is an "
                        "artifact choice)",
            },
        }
    ]
    return files, "zero-photon g2 over the dephasing/threshold plane"


def _fig4_files(prefix):
    files = []
    for dth in _FIG4_DTH:
        dp = DimensionlessParams(
            g=2.0 / 3.0, ratio_2k_gp=2.0, n_emitters=_PRESET_N0, dth_over_n0=dth
        )
        params = from_dimensionless(dp)
        d = derive(params)
        pumps = pump_grid_values(1e-2 * d.p_th, 1e2 * d.p_th, _PRESET_POINTS, "log")
        meta = _dimensionless_meta(dp.g, 2.0, dth, dp.n_emitters)
        files += _preset_sweep_files(
            prefix, [("glre", f"dth_{dth:g}")], params, pumps, CORE_OUTPUTS, meta
        )
    return files


def _figure_fig4a():
    return _fig4_files("fig4a"), "photon output vs pump while varying delta_th/N0"


def _figure_fig4b():
    return _fig4_files("fig4b"), "autocorrelation g2 vs pump while varying delta_th/N0"


_FIGURES = {
    "fig1b": _figure_fig1b,
    "fig2a": _figure_fig2a,
    "fig2b": _figure_fig2b,
    "fig3a": _figure_fig3a,
    "fig3b": _figure_fig3b,
    "fig4a": _figure_fig4a,
    "fig4b": _figure_fig4b,
}


_COLUMN_MEANINGS = {
    "pump": "dimensionless pump P (pump rate gamma_par P)",
    "n": "mean intracavity photon number",
    "delta": "total population inversion",
    "n_e": "upper lasing-level population",
    "c_factor": "collective-effect strength C of the stationary gain "
                "(full two-level model only)",
    "g2": "zero-delay photon autocorrelation at the row's photon number",
    "model": "model tag",
    "warnings": "semicolon-separated flags (e.g. ne_exceeds_n0)",
    "beta": "spontaneous-emission fraction g/(1+g)",
    "beta_c": "collectively corrected fraction g/(1+g+2k/gp)",
    "t": "time in the configured rate units",
    "sigma": "collective emitter-field correlation",
    "d_corr": "collective dipole-dipole correlation",
    "gp_over_2k": "gamma_perp / (2 kappa)",
    "n0_over_dth": "N0 / delta_th",
    "g2_at_n0": "zero-photon autocorrelation g2(n=0)",
}


def cmd_figure(args) -> int:
    if args.name not in _FIGURES:
        raise ConfigError(
            f"unknown figure {args.name!r}; expected one of {sorted(_FIGURES)}"
        )
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    files, description = _FIGURES[args.name]()
    columns_used = sorted({c for spec in files for c in spec["header"]})
    manifest = {
        "figure": args.name,
        "description": description,
        "column_meanings": {c: _COLUMN_MEANINGS[c] for c in columns_used},
        "files": [],
    }
    for spec in files:
        path = os.path.join(outdir, spec["path"])
        with open(path, "w", encoding="utf-8", newline="") as fh:
            _write_csv(fh, spec["header"], spec["rows"])
        manifest["files"].append(
            {"path": spec["path"], "columns": spec["header"], **spec["meta"]}
        )
    manifest_path = os.path.join(outdir, f"{args.name}_manifest.json")
    with open(manifest_path, "w", encoding="utf-8", newline="") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(manifest_path)
    return EXIT_OK


# ----------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nanolaser",
        description="Stationary solutions, photon statistics and dynamics "
                    "of nanolaser rate models with collective effects.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="JSON configuration file")
        p.add_argument("--model", choices=MODELS, help="model to evaluate")
        p.add_argument("--out", help="output path ('-' for stdout, the default)")
        p.add_argument(
            "--pump-dephasing", action="store_true",
            help="recompute gamma_perp(P) = 2 gamma_d + gamma_par (1+P) "
                 "per pump value",
        )

    p = sub.add_parser("steady", help="evaluate one stationary record")
    add_common(p)
    p.add_argument("--pump", type=float, help="dimensionless pump P")
    p.set_defaults(func=cmd_steady)

    p = sub.add_parser("sweep", help="stationary records over a pump grid")
    add_common(p)
    p.add_argument("--pump-min", type=float)
    p.add_argument("--pump-max", type=float)
    p.add_argument("--pump-count", type=int)
    p.add_argument("--pump-log", action="store_true", help="log-spaced grid")
    p.add_argument("--workers", type=int, help="parallel worker processes")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("integrate", help="time-integrate a model to CSV")
    add_common(p)
    p.add_argument("--pump", type=float, help="dimensionless pump P")
    p.add_argument("--t-max", type=float, dest="t_max")
    p.add_argument("--dt", type=float, help="initial (or fixed) step size")
    p.add_argument("--abs-tol", type=float, dest="abs_tol",
                   help="absolute tolerance (enables adaptive stepping)")
    p.add_argument("--rel-tol", type=float, dest="rel_tol",
                   help="relative tolerance (enables adaptive stepping)")
    p.add_argument("--steady-tol", type=float, dest="steady_tol")
    p.add_argument("--max-steps", type=int, dest="max_steps")
    p.add_argument("--stride", type=int, default=1,
                   help="record every N-th step")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("figure", help="emit a figure preset as CSV + manifest")
    p.add_argument("name", help="preset name (fig1b, fig2a, fig2b, fig3a, "
                                "fig3b, fig4a, fig4b)")
    p.add_argument("--out", help="output directory (default '.')")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParameterError, RegimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except NanolaserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
