"""Command-line front end.

Subcommands:

    latency     per-scheme latencies and optimal plans at one operating point
    sweep       latency versus epsilon or payload size, CSV/JSON rows
    relay-map   best scheme over a grid of relay positions, CSV/JSON rows
    validate    Monte Carlo check of a scheme's error accounting
    check-props high-SNR latency/rate conditions for the operating point

The channel is given either directly (--h0 --h1 --h2) or through relay
geometry (--relay-x --relay-y --pathloss, with the source at (0,0) and the
destination at (1,0)); mixing the two is a usage error. Powers are taken
in dB and converted at this boundary; everything below works in linear
units. A JSON config file (--config) may supply any flag by its long name
with underscores; explicit flags win over the file, and both win over
--preset values.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 infeasible scheme.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict

import numpy as np

from . import _kernels
from .channel import ChannelSpec, Geometry, channel_from_geometry, db_to_linear, derive_snrs
from .errors import DomainError, InfeasibleError
from .exponent import RhoSolution, Workload
from .highsnr import high_snr_report
from .mc import validate_plan
from .schemes import (
    AF,
    DEFAULT_L_MAX,
    DF,
    P2P,
    DfPlan,
    af_latency,
    compare_schemes,
    df_latency,
    ordering_from_values,
)

SWEEP_HEADER = "sweep_var,sweep_value,n_p2p,n_df,n_af,df_l,df_delta,af_l,best"
MAP_HEADER = "x,y,n_p2p,n_df,n_af,ordering,best,rate_df_gt_p2p"
LATENCY_HEADER = "scheme,latency,latency_ceil,rho,l,delta,n1,n2,n3,tau"

PRESETS = {
    # h0 = h2 = 1, h1 = 2, P = 10 dB, Pr = 16 P, B = 10 kbit, eps = 1e-3
    "fig4": {
        "h0": 1.0, "h1": 2.0, "h2": 1.0,
        "p_lin": 10.0, "pr_lin": 160.0,
        "b_bits": 10000.0, "epsilon": 1e-3,
    },
    # path-loss exponent 3, P = 20 dB, Pr = 2 P, B = 10 kbit, eps = 1e-3,
    # relay-position grid around the source-destination segment
    "fig2": {
        "relay_x": 0.5, "relay_y": 0.0, "pathloss": 3.0,
        "p_lin": 100.0, "pr_lin": 200.0,
        "b_bits": 10000.0, "epsilon": 1e-3,
        "x_min": -0.5, "x_max": 1.5, "y_min": -0.75, "y_max": 0.75,
        "nx": 81, "ny": 61,
    },
}

GAIN_KEYS = ("h0", "h1", "h2")
GEOM_KEYS = ("relay_x", "relay_y", "pathloss")


class UsageError(Exception):
    pass


def fmt_csv(x: float) -> str:
    """Fixed scientific notation, 10 significant digits."""
    if math.isinf(x):
        return "inf"
    return f"{x:.9e}"


def fmt_bool(x: bool) -> str:
    return "true" if x else "false"


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE", help="JSON file of flag defaults")
    p.add_argument("--preset", choices=sorted(PRESETS), help="named parameter preset")
    p.add_argument("--b-bits", type=float, dest="b_bits", help="payload size in bits")
    p.add_argument("--epsilon", type=float, help="target error probability")
    p.add_argument("--p-db", type=float, dest="p_db", help="source power in dB")
    p.add_argument("--pr-db", type=float, dest="pr_db", help="relay power in dB")
    p.add_argument("--h0", type=float, help="source-destination gain")
    p.add_argument("--h1", type=float, help="source-relay gain")
    p.add_argument("--h2", type=float, help="relay-destination gain")
    p.add_argument("--relay-x", type=float, dest="relay_x", help="relay x position")
    p.add_argument("--relay-y", type=float, dest="relay_y", help="relay y position")
    p.add_argument("--pathloss", type=float, help="path-loss exponent (power law)")
    p.add_argument("--integer-blocks", action="store_true", dest="integer_blocks",
                   help="ceil per-block lengths before the schedule formulas")
    p.add_argument("--l-max", type=int, dest="l_max", help="block-count search cap")
    p.add_argument("--seed", type=int, help="RNG seed for Monte Carlo")
    p.add_argument("--jobs", type=int, help="parallel workers")
    p.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relaylat",
        description="Latency of point-to-point, decode-forward, and "
                    "amplify-forward transmission over a Gaussian relay channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("latency", help="evaluate one operating point")
    _common_flags(p)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("sweep", help="sweep epsilon or payload size")
    _common_flags(p)
    p.add_argument("--sweep-var", choices=("epsilon", "payload"), dest="sweep_var")
    p.add_argument("--values", help="comma-separated sweep values")
    p.add_argument("--log-range", nargs=3, type=float, dest="log_range",
                   metavar=("START", "STOP", "COUNT"),
                   help="log-spaced sweep values")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("relay-map", help="best scheme per relay position")
    _common_flags(p)
    for k in ("x-min", "x-max", "y-min", "y-max"):
        p.add_argument(f"--{k}", type=float, dest=k.replace("-", "_"))
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("validate", help="Monte Carlo check of the error accounting")
    _common_flags(p)
    p.add_argument("--scheme", choices=("df", "af"), required=True)
    p.add_argument("--trials", type=int)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("check-props", help="high-SNR conditions and rates")
    _common_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _load_config(path: str, known: set[str]) -> dict:
    try:
        with open(path) as f:
            cfg = json.load(f)
    except OSError as e:
        raise UsageError(f"cannot read config file: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"config file is not valid JSON: {e}") from e
    if not isinstance(cfg, dict):
        raise UsageError("config file must contain a JSON object")
    unknown = set(cfg) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return cfg


class Params:
    """Flag > config file > preset resolution for one invocation."""

    def __init__(self, args: argparse.Namespace):
        self.args = vars(args)
        known = {k for k in self.args if k not in ("command",)}
        known |= {"p_lin", "pr_lin"}
        self.config = _load_config(args.config, known) if args.config else {}
        preset_name = self._flag_or_config("preset")
        if preset_name is not None and preset_name not in PRESETS:
            raise UsageError(f"unknown preset {preset_name!r}")
        self.preset = PRESETS.get(preset_name, {}) if preset_name else {}

    def _flag_or_config(self, key, default=None):
        v = self.args.get(key)
        if v is None or v is False:
            v = self.config.get(key)
        return default if v is None else v

    def get(self, key, default=None):
        v = self.args.get(key)
        if v is None or v is False:
            v = self.config.get(key)
        if v is None or v is False:
            v = self.preset.get(key)
        return default if v is None else v

    def explicit(self, keys) -> bool:
        """True if any of the keys was given by flag or config file."""
        return any(
            self.args.get(k) is not None or k in self.config for k in keys
        )

    def require(self, key, what):
        v = self.get(key)
        if v is None:
            raise UsageError(f"missing {what} (--{key.replace('_', '-')})")
        return v


def _resolve_powers(par: Params) -> tuple[float, float]:
    p_db = par._flag_or_config("p_db")
    pr_db = par._flag_or_config("pr_db")
    p = db_to_linear(p_db) if p_db is not None else par.preset.get("p_lin")
    pr = db_to_linear(pr_db) if pr_db is not None else par.preset.get("pr_lin")
    if p is None:
        raise UsageError("missing source power (--p-db)")
    if pr is None:
        raise UsageError("missing relay power (--pr-db)")
    return float(p), float(pr)


def resolve_channel(par: Params) -> tuple[ChannelSpec, Geometry | None]:
    gains = par.explicit(GAIN_KEYS)
    geom = par.explicit(GEOM_KEYS)
    if gains and geom:
        raise UsageError("give either --h0/--h1/--h2 or relay geometry flags, not both")
    p, pr = _resolve_powers(par)
    use_geom = geom or (not gains and any(k in par.preset for k in GEOM_KEYS))
    if use_geom:
        g = Geometry(
            source_pos=(0.0, 0.0),
            dest_pos=(1.0, 0.0),
            relay_pos=(float(par.require("relay_x", "relay x position")),
                       float(par.require("relay_y", "relay y position"))),
            pathloss_exponent=float(par.get("pathloss", 3.0)),
        )
        return channel_from_geometry(g, p, pr), g
    spec = ChannelSpec(
        h0=float(par.require("h0", "direct gain")),
        h1=float(par.require("h1", "source-relay gain")),
        h2=float(par.require("h2", "relay-destination gain")),
        p=p, pr=pr,
    )
    return spec, None


def resolve_workload(par: Params) -> Workload:
    return Workload(
        bits=float(par.require("b_bits", "payload size")),
        epsilon=float(par.require("epsilon", "error probability target")),
    )


def _plan_dict(plan) -> dict:
    if isinstance(plan, RhoSolution):
        return {"rho": plan.rho}
    return asdict(plan)


def _emit(lines: list[str], par: Params) -> None:
    text = "\n".join(lines) + "\n"
    out = par.get("output")
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _jobs(par: Params) -> int:
    jobs = int(par.get("jobs", 0) or 0)
    if jobs < 0:
        raise UsageError("--jobs must be >= 0")
    if jobs == 0:
        jobs = min(8, os.cpu_count() or 1)
    return jobs


def cmd_latency(args: argparse.Namespace) -> int:
    par = Params(args)
    spec, _ = resolve_channel(par)
    w = resolve_workload(par)
    l_max = int(par.get("l_max", DEFAULT_L_MAX))
    integer_blocks = bool(par.get("integer_blocks", False))
    cmp = compare_schemes(spec, w, l_max=l_max, integer_blocks=integer_blocks)
    snrs = derive_snrs(spec)
    try:
        report = high_snr_report(w, snrs)
        report_err = None
    except DomainError as e:
        report = None
        report_err = str(e)

    fmt = par.get("format", "text")
    if fmt == "json":
        payload = {
            "workload": {"bits": w.bits, "epsilon": w.epsilon},
            "channel": asdict(spec),
            "snrs": asdict(snrs),
            "schemes": {
                name: None if res is None else {
                    "latency": res.latency,
                    "latency_ceil": res.latency_ceil,
                    "plan": _plan_dict(res.plan),
                    "evaluations": res.diagnostics.evaluations,
                }
                for name, res in cmp.results.items()
            },
            "best": cmp.best,
            "ordering": cmp.ordering,
            "tied": cmp.tied,
            "high_snr": None if report is None else asdict(report),
            "high_snr_error": report_err,
        }
        _emit([json.dumps(payload, sort_keys=True)], par)
        return 0

    if fmt == "csv":
        lines = [LATENCY_HEADER]
        for name in (P2P, DF, AF):
            res = cmp.results[name]
            if res is None:
                lines.append(f"{name},inf,,,,,,,,")
                continue
            plan = res.plan
            ceil = "" if res.latency_ceil is None else fmt_csv(res.latency_ceil)
            if isinstance(plan, RhoSolution):
                row = [name, fmt_csv(res.latency), ceil, fmt_csv(plan.rho),
                       "", "", "", "", "", ""]
            elif isinstance(plan, DfPlan):
                row = [name, fmt_csv(res.latency), ceil, "", str(plan.l),
                       fmt_csv(plan.delta), fmt_csv(plan.n1), fmt_csv(plan.n2),
                       "", fmt_csv(plan.tau)]
            else:
                row = [name, fmt_csv(res.latency), ceil, "", str(plan.l),
                       "", "", "", fmt_csv(plan.n3), ""]
            lines.append(",".join(row))
        _emit(lines, par)
        return 0

    lines = [
        f"payload: {w.bits:g} bits, epsilon: {w.epsilon:g}",
        f"gains: h0={spec.h0:g} h1={spec.h1:g} h2={spec.h2:g}  "
        f"powers: P={spec.p:g} Pr={spec.pr:g} (linear)",
        f"snrs: p2p={snrs.snr_p2p:.6g} df1={snrs.snr_df1:.6g} "
        f"df2={snrs.snr_df2:.6g} af={snrs.snr_af:.6g}",
        "",
    ]
    for name in (P2P, DF, AF):
        res = cmp.results[name]
        if res is None:
            lines.append(f"{name:>4}: infeasible")
            continue
        extra = ""
        if res.latency_ceil is not None:
            extra = f"  (ceiled: {res.latency_ceil:.0f})"
        plan = res.plan
        if isinstance(plan, RhoSolution):
            detail = f"rho*={plan.rho:.6g}"
        elif isinstance(plan, DfPlan):
            detail = (f"L*={plan.l} delta*={plan.delta:.6g} "
                      f"N1={plan.n1:.6g} N2={plan.n2:.6g} tau={plan.tau:.6g}")
        else:
            detail = f"L*={plan.l} N3={plan.n3:.6g}"
        lines.append(f"{name:>4}: {res.latency:12.4f} channel uses{extra}  [{detail}]")
    lines += ["", f"ordering: {cmp.ordering}" + ("  (tie)" if cmp.tied else ""),
              f"best: {cmp.best}"]
    if report is not None:
        lines += [
            "",
            f"latency conditions (high SNR): DF {fmt_bool(report.df_latency_condition)}, "
            f"AF {fmt_bool(report.af_latency_condition)}",
            f"rates: P2P {report.r_p2p:.4f} b/use, DF {report.r_df:.4f} b/use; "
            f"rate conditions: DF {fmt_bool(report.rate_condition_df)}, "
            f"AF {fmt_bool(report.rate_condition_af)}",
        ]
        if report.low_snr_warnings:
            lines.append(
                "warning: below 10 dB, high-SNR expressions are loose for: "
                + ", ".join(report.low_snr_warnings)
            )
    else:
        lines += ["", f"high-SNR report unavailable: {report_err}"]
    _emit(lines, par)
    return 0


def _sweep_values(par: Params) -> tuple[str, list[float]]:
    var = par.require("sweep_var", "sweep variable (--sweep-var)")
    if var not in ("epsilon", "payload"):
        raise UsageError("--sweep-var must be epsilon or payload")
    raw = par.get("values")
    log_range = par.get("log_range")
    if raw is not None and log_range is not None:
        raise UsageError("give --values or --log-range, not both")
    if raw is not None:
        if isinstance(raw, str):
            items = [s for s in raw.split(",") if s.strip()]
        else:
            items = list(raw)
        try:
            values = [float(s) for s in items]
        except ValueError as e:
            raise UsageError(f"bad sweep value: {e}") from e
    elif log_range is not None:
        start, stop, count = log_range
        count = int(count)
        if count < 1 or start <= 0 or stop <= 0:
            raise UsageError("--log-range needs positive bounds and count >= 1")
        values = list(np.geomspace(start, stop, count))
    else:
        raise UsageError("missing sweep values (--values or --log-range)")
    if not values:
        raise UsageError("sweep needs at least one value")
    for v in values:
        if var == "epsilon" and not 0.0 < v < 1.0:
            raise UsageError(f"epsilon sweep value {v} outside (0, 1)")
        if var == "payload" and v < 0.0:
            raise UsageError(f"payload sweep value {v} is negative")
    return var, sorted(values)


def cmd_sweep(args: argparse.Namespace) -> int:
    par = Params(args)
    spec, _ = resolve_channel(par)
    var, values = _sweep_values(par)
    b_bits = par.get("b_bits")
    epsilon = par.get("epsilon")
    if var == "epsilon" and b_bits is None:
        raise UsageError("epsilon sweep needs a fixed payload (--b-bits)")
    if var == "payload" and epsilon is None:
        raise UsageError("payload sweep needs a fixed epsilon (--epsilon)")
    l_max = int(par.get("l_max", DEFAULT_L_MAX))
    integer_blocks = bool(par.get("integer_blocks", False))

    def point(v: float) -> dict:
        w = Workload(bits=v, epsilon=float(epsilon)) if var == "payload" \
            else Workload(bits=float(b_bits), epsilon=v)
        try:
            cmp = compare_schemes(spec, w, l_max=l_max, integer_blocks=integer_blocks)
        except InfeasibleError:
            return {"value": v, "n_p2p": math.inf, "n_df": math.inf,
                    "n_af": math.inf, "df_l": None, "df_delta": None,
                    "af_l": None, "best": ""}
        df = cmp.results[DF]
        af = cmp.results[AF]
        df_plan = None if df is None else df.plan
        af_plan = None if af is None else af.plan
        return {
            "value": v,
            "n_p2p": cmp.n_p2p, "n_df": cmp.n_df, "n_af": cmp.n_af,
            "df_l": None if df_plan is None else df_plan.l,
            "df_delta": None if df_plan is None else df_plan.delta,
            "af_l": None if af_plan is None else af_plan.l,
            "best": cmp.best,
        }

    with ThreadPoolExecutor(max_workers=_jobs(par)) as pool:
        rows = list(pool.map(point, values))

    if par.get("format", "csv") == "json":
        payload = [{"sweep_var": var, "sweep_value": r["value"],
                    "n_p2p": r["n_p2p"], "n_df": r["n_df"], "n_af": r["n_af"],
                    "df_l": r["df_l"], "df_delta": r["df_delta"],
                    "af_l": r["af_l"], "best": r["best"]} for r in rows]
        _emit([json.dumps(payload, sort_keys=True,
                          default=lambda x: "inf" if x == math.inf else x)], par)
        return 0

    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(",".join([
            var,
            fmt_csv(r["value"]),
            fmt_csv(r["n_p2p"]),
            fmt_csv(r["n_df"]),
            fmt_csv(r["n_af"]),
            "" if r["df_l"] is None else str(r["df_l"]),
            "" if r["df_delta"] is None else fmt_csv(r["df_delta"]),
            "" if r["af_l"] is None else str(r["af_l"]),
            r["best"],
        ]))
    _emit(lines, par)
    return 0


def run_relay_map(w: Workload, p: float, pr: float, exponent: float,
                  x_min: float, x_max: float, y_min: float, y_max: float,
                  nx: int, ny: int, l_max: int = DEFAULT_L_MAX) -> list[dict]:
    """Evaluate the scheme comparison on an nx-by-ny grid of relay positions.

    Returns one dict per cell in row-major order (y outer, x inner). Cells
    where the relay coincides with an endpoint carry ``singular=True``.
    """
    if nx < 2 or ny < 2:
        raise DomainError("grid resolution must be at least 2 in each direction")
    if not (x_min < x_max and y_min < y_max):
        raise DomainError("grid bounds must be ordered")
    xs_axis = np.linspace(x_min, x_max, nx)
    ys_axis = np.linspace(y_min, y_max, ny)
    gx, gy = np.meshgrid(xs_axis, ys_axis)
    xs = gx.ravel()
    ys = gy.ravel()
    out = np.empty((xs.size, _kernels.MAP_COLS))
    _kernels.relay_map_kernel(xs, ys, 0.0, 0.0, 1.0, 0.0, exponent,
                              p, pr, w.bits, w.epsilon, l_max, out)
    rows = []
    for i in range(xs.size):
        if out[i, _kernels.MAP_SINGULAR] == 1.0:
            rows.append({"x": float(xs[i]), "y": float(ys[i]), "singular": True})
            continue
        n_p2p = float(out[i, _kernels.MAP_N_P2P])
        n_df = float(out[i, _kernels.MAP_N_DF])
        n_af = float(out[i, _kernels.MAP_N_AF])
        best, label, tied = ordering_from_values(n_p2p, n_df, n_af)
        rows.append({
            "x": float(xs[i]), "y": float(ys[i]), "singular": False,
            "n_p2p": n_p2p, "n_df": n_df, "n_af": n_af,
            "df_l": int(out[i, _kernels.MAP_DF_L]),
            "df_delta": float(out[i, _kernels.MAP_DF_DELTA]),
            "af_l": int(out[i, _kernels.MAP_AF_L]),
            "ordering": label, "best": best, "tied": tied,
            "rate_df_gt_p2p": bool(out[i, _kernels.MAP_RATE_DF] == 1.0),
        })
    return rows


def cmd_relay_map(args: argparse.Namespace) -> int:
    par = Params(args)
    if par.explicit(GAIN_KEYS):
        raise UsageError("relay-map varies the relay position; direct gains "
                         "(--h0/--h1/--h2) cannot be used here")
    p, pr = _resolve_powers(par)
    w = resolve_workload(par)
    exponent = float(par.get("pathloss", 3.0))
    bounds = {}
    for k in ("x_min", "x_max", "y_min", "y_max", "nx", "ny"):
        v = par.get(k)
        if v is None:
            raise UsageError(f"missing map parameter --{k.replace('_', '-')}")
        bounds[k] = v
    jobs = _jobs(par)
    try:
        import numba

        numba.set_num_threads(max(1, min(jobs, numba.config.NUMBA_NUM_THREADS)))
    except (ImportError, ValueError):
        pass
    rows = run_relay_map(
        w, p, pr, exponent,
        float(bounds["x_min"]), float(bounds["x_max"]),
        float(bounds["y_min"]), float(bounds["y_max"]),
        int(bounds["nx"]), int(bounds["ny"]),
        l_max=int(par.get("l_max", DEFAULT_L_MAX)),
    )

    if par.get("format", "csv") == "json":
        _emit([json.dumps(rows, sort_keys=True)], par)
        return 0

    lines = [MAP_HEADER]
    for r in rows:
        if r["singular"]:
            lines.append(",".join([
                fmt_csv(r["x"]), fmt_csv(r["y"]),
                "singular", "singular", "singular", "singular", "singular",
                "singular",
            ]))
            continue
        lines.append(",".join([
            fmt_csv(r["x"]), fmt_csv(r["y"]),
            fmt_csv(r["n_p2p"]), fmt_csv(r["n_df"]), fmt_csv(r["n_af"]),
            r["ordering"], r["best"], fmt_bool(r["rate_df_gt_p2p"]),
        ]))
    _emit(lines, par)
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    par = Params(args)
    spec, _ = resolve_channel(par)
    w = resolve_workload(par)
    trials = par.get("trials")
    if trials is None or int(trials) < 1:
        raise UsageError("--trials must be a positive integer")
    seed = int(par.get("seed", 0))
    l_max = int(par.get("l_max", DEFAULT_L_MAX))
    scheme = args.scheme
    if scheme == "df":
        res = df_latency(spec, w, l_max=l_max)
    else:
        res = af_latency(spec, w, l_max=l_max)
    report = validate_plan(res.plan, w, trials=int(trials), seed=seed,
                           workers=_jobs(par))
    payload = {
        "scheme": res.scheme,
        "plan": _plan_dict(res.plan),
        "trials": report.trials,
        "seed": seed,
        "failures": report.failures,
        "empirical_pe": report.empirical_pe,
        "wilson_ci": list(report.wilson_ci),
        "union_bound": report.union_bound,
        "bound_satisfied": report.bound_satisfied,
        "epsilon_target": report.epsilon_target,
        "within_target": report.within_target,
        "note": "block-outcome accounting validated at budget-limit "
                "probabilities; per-block error rates are upper-bound "
                "budgets, not coding performance",
    }
    _emit([json.dumps(payload, sort_keys=True)], par)
    return 0


def cmd_check_props(args: argparse.Namespace) -> int:
    par = Params(args)
    spec, _ = resolve_channel(par)
    w = resolve_workload(par)
    snrs = derive_snrs(spec)
    report = high_snr_report(w, snrs)
    if par.get("format", "text") == "json":
        payload = {"snrs": asdict(snrs), **asdict(report)}
        payload["low_snr_warnings"] = list(report.low_snr_warnings)
        _emit([json.dumps(payload, sort_keys=True)], par)
        return 0
    lines = [
        f"snrs: p2p={snrs.snr_p2p:.6g} df1={snrs.snr_df1:.6g} "
        f"df2={snrs.snr_df2:.6g} af={snrs.snr_af:.6g}",
        f"high-SNR latency approximations: P2P {report.n_p2p_approx:.4f}, "
        f"DF bound {report.n_df_bound:.4f}, AF bound {report.n_af_bound:.4f}",
        f"DF latency condition: {fmt_bool(report.df_latency_condition)}",
        f"AF latency condition: {fmt_bool(report.af_latency_condition)}",
        f"rates: P2P {report.r_p2p:.4f} b/use, DF {report.r_df:.4f} b/use",
        f"DF rate condition: {fmt_bool(report.rate_condition_df)}",
        f"AF rate condition: {fmt_bool(report.rate_condition_af)}",
    ]
    if report.low_snr_warnings:
        lines.append("warning: SNRs below 10 dB: "
                     + ", ".join(report.low_snr_warnings))
    _emit(lines, par)
    return 0


COMMANDS = {
    "latency": cmd_latency,
    "sweep": cmd_sweep,
    "relay-map": cmd_relay_map,
    "validate": cmd_validate,
    "check-props": cmd_check_props,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 3
    except InfeasibleError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return 4


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
