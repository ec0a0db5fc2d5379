"""Command-line front end.

Subcommands: run (one scenario), sweep (mode x system x users table),
curve (comfort/energy tradeoff samples), reduction (saving vs the
room-system baseline), defaults (effective default config), report
(figures plus the CSV tables behind them).

Exit codes: 0 success, 1 domain error, 2 usage or config error.
"""

import argparse
import json
import os
import sys

from . import sim
from .config import (
    FORMATS,
    default_config,
    scenario_from_config,
    validate_config,
)
from .control import GHCS_POLICIES, tdi_curve
from .errors import ConfigError, DomainError
from .sim import MODES, SYSTEMS, Scenario, reduction_ratio, run_scenario

SEED_ENV_VAR = "COMFORT_OPT_SEED"
DEFAULT_USER_COUNTS = (5, 10, 15, 20, 25)

SWEEP_HEADER = ("mode,system,n_users,room_volume_m3,env_di,tdi,t_setpoint_c,"
                "rh_setpoint_pct,es,hv_kj,hf_kj,hp_kj,he_kj,ihcs_kj,thc_kj,thc_kwh")
CURVE_HEADER = "tdi,es,he_kj,ihcs_kj,thc_kj"
REDUCTION_HEADER = "mode,n_users,thc_ghcs_kj,thc_combined_kj,reduction_ratio"


def fmt(value: float) -> str:
    """Render a float with 6 significant digits (stable golden-file form)."""
    return format(float(value), ".6g")


def sweep_row(res: sim.ScenarioResult) -> str:
    s, d, h = res.scenario, res.decision, res.heat
    cols = [
        s.mode, s.system, str(s.n_users), fmt(s.room.volume), fmt(res.env_di),
        fmt(d.tdi), fmt(d.setpoint.t), fmt(d.setpoint.rh), fmt(d.es),
        fmt(h.hv), fmt(h.hf), fmt(h.hp), fmt(h.he), fmt(h.ihcs), fmt(h.thc),
        fmt(h.thc / 3600.0),
    ]
    return ",".join(cols)


def result_to_dict(res: sim.ScenarioResult) -> dict:
    s, d, h = res.scenario, res.decision, res.heat
    return {
        "mode": s.mode,
        "system": s.system,
        "n_users": s.n_users,
        "room_volume_m3": s.room.volume,
        "env_di": res.env_di,
        "tdi": d.tdi,
        "setpoint": {"t_c": d.setpoint.t, "rh_pct": d.setpoint.rh},
        "dp": list(res.population.dps),
        "dn": list(d.dn),
        "es": d.es,
        "heat_kj": {"hv": h.hv, "hf": h.hf, "hp": h.hp, "he": h.he,
                    "ihcs": h.ihcs, "thc": h.thc},
        "thc_kwh": h.thc / 3600.0,
    }


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv_text(header: str, rows) -> str:
    return "\n".join([header, *rows]) + "\n"


def _split_list(raw: str, what: str) -> list:
    items = [part.strip() for part in raw.split(",") if part.strip()]
    if not items:
        raise ConfigError(f"empty {what} list: {raw!r}")
    return items


def _parse_counts(raw: str) -> list:
    try:
        return [int(item) for item in _split_list(raw, "user count")]
    except ValueError as exc:
        raise ConfigError(f"malformed user count list {raw!r}") from exc


def _parse_modes(raw: str) -> list:
    modes = _split_list(raw, "mode")
    for mode in modes:
        if mode not in MODES:
            raise ConfigError(f"unknown mode {mode!r}; expected one of {MODES}")
    return modes


def _parse_systems(raw: str) -> list:
    systems = _split_list(raw, "system")
    for system in systems:
        if system not in SYSTEMS:
            raise ConfigError(f"unknown system {system!r}; expected one of {SYSTEMS}")
    return systems


def _parse_tdi_range(raw: str) -> tuple:
    parts = raw.split(":")
    if len(parts) != 3:
        raise ConfigError(f"malformed TDI range {raw!r}; expected lo:hi:step")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"malformed TDI range {raw!r}; expected numbers") from exc
    if not lo < hi or step <= 0:
        raise ConfigError(f"malformed TDI range {raw!r}; need lo < hi and step > 0")
    return lo, hi, step


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}"
        ) from exc


def _base_config(args) -> dict:
    """Merge config file and flag overrides into one validated document.

    Precedence for the seed: --seed flag, then an explicit value in the
    config file, then the COMFORT_OPT_SEED environment variable.
    """
    raw = _read_json(args.config) if getattr(args, "config", None) else {}
    cfg = validate_config(raw)

    seed_in_file = isinstance(raw.get("population"), dict) and "seed" in raw["population"]
    if getattr(args, "seed", None) is not None:
        cfg["population"]["seed"] = args.seed
    elif not seed_in_file and os.environ.get(SEED_ENV_VAR):
        try:
            cfg["population"]["seed"] = int(os.environ[SEED_ENV_VAR])
        except ValueError as exc:
            raise ConfigError(
                f"{SEED_ENV_VAR} must be an integer, got "
                f"{os.environ[SEED_ENV_VAR]!r}"
            ) from exc

    if getattr(args, "population", None) is not None:
        cfg["population"]["mode"] = args.population
    if getattr(args, "sigma", None) is not None:
        cfg["population"]["sigma"] = args.sigma
    if getattr(args, "volume", None) is not None:
        cfg["volume_m3"] = args.volume
    if getattr(args, "baseline_setpoint", None) is not None:
        cfg["baseline_setpoint"] = args.baseline_setpoint
    if getattr(args, "format", None) is not None:
        cfg["format"] = args.format
    if getattr(args, "out", None) is not None:
        cfg["out"] = args.out
    return cfg


def _scenario_variant(cfg: dict, mode: str, system: str, n_users: int) -> Scenario:
    variant = dict(cfg)
    variant["mode"] = mode
    variant["system"] = system
    variant["n_users"] = n_users
    return scenario_from_config(variant)


def cmd_run(args) -> int:
    cfg = _base_config(args)
    if args.mode is not None:
        cfg["mode"] = args.mode
    if args.system is not None:
        cfg["system"] = args.system
    if args.users is not None:
        cfg["n_users"] = args.users
    result = run_scenario(scenario_from_config(cfg))
    if cfg["format"] == "csv":
        _write_text(_csv_text(SWEEP_HEADER, [sweep_row(result)]), cfg["out"])
    else:
        _write_text(json.dumps(result_to_dict(result), indent=2) + "\n", cfg["out"])
    return 0


def cmd_sweep(args) -> int:
    cfg = _base_config(args)
    modes = _parse_modes(args.mode)
    systems = _parse_systems(args.systems)
    counts = _parse_counts(args.users)
    results = [
        run_scenario(_scenario_variant(cfg, mode, system, n))
        for mode in MODES if mode in modes
        for system in SYSTEMS if system in systems
        for n in counts
    ]
    if cfg["format"] == "json":
        payload = [result_to_dict(r) for r in results]
        _write_text(json.dumps(payload, indent=2) + "\n", cfg["out"])
    else:
        _write_text(_csv_text(SWEEP_HEADER, (sweep_row(r) for r in results)),
                    cfg["out"])
    return 0


def cmd_curve(args) -> int:
    cfg = _base_config(args)
    lo, hi, step = _parse_tdi_range(args.tdi_range)
    scenario = _scenario_variant(cfg, args.mode, "combined", args.users)
    points = tdi_curve(scenario.outside, scenario.room, scenario.population(),
                       scenario.band, scenario.ihcs, scenario.thermal,
                       scenario.psychro, scenario.setpoint_rh, lo, hi, step)
    rows = (
        ",".join([fmt(p.tdi), fmt(p.es), fmt(p.he), fmt(p.ihcs), fmt(p.thc)])
        for p in points
    )
    _write_text(_csv_text(CURVE_HEADER, rows), cfg["out"])
    return 0


def cmd_reduction(args) -> int:
    cfg = _base_config(args)
    counts = _parse_counts(args.users)
    rows = []
    for n in counts:
        baseline = run_scenario(_scenario_variant(cfg, args.mode, "ghcs-only", n))
        proposed = run_scenario(_scenario_variant(cfg, args.mode, "combined", n))
        ratio = reduction_ratio(baseline, proposed)
        rows.append(",".join([args.mode, str(n), fmt(baseline.heat.thc),
                              fmt(proposed.heat.thc), fmt(ratio)]))
    _write_text(_csv_text(REDUCTION_HEADER, rows), cfg["out"])
    return 0


def cmd_defaults(args) -> int:
    _write_text(json.dumps(default_config(), indent=2) + "\n",
                getattr(args, "out", None))
    return 0


def cmd_report(args) -> int:
    from . import report

    cfg = _base_config(args)
    modes = _parse_modes(args.mode)
    counts = _parse_counts(args.users)
    paths = report.render_report(args.out_dir, cfg, modes, counts)
    for path in paths:
        print(path)
    return 0


def _add_common_flags(p, seed=True, population=True, volume=True,
                      baseline=True, out=True):
    p.add_argument("--config", help="JSON config file (flags override it)")
    if seed:
        p.add_argument("--seed", type=int,
                       help=f"population seed (default from ${SEED_ENV_VAR})")
    if population:
        p.add_argument("--population", choices=("stratified", "random"),
                       help="population sampling mode")
        p.add_argument("--sigma", type=float,
                       help="std deviation of the offset distribution")
    if volume:
        p.add_argument("--volume", type=float,
                       help="room volume override, m^3")
    if baseline:
        p.add_argument("--baseline-setpoint", choices=GHCS_POLICIES,
                       help="setpoint policy of the room-system-only baseline")
    if out:
        p.add_argument("--out", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comfort-opt",
        description="Simulate and optimize combined room/wearable "
                    "heating-cooling control.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a single scenario")
    _add_common_flags(p)
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--system", choices=SYSTEMS)
    p.add_argument("--users", type=int, help="number of occupants")
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="run a mode x system x users sweep")
    _add_common_flags(p)
    p.add_argument("--mode", default="cooling,heating",
                   help="comma list of modes (default both)")
    p.add_argument("--systems", default="ghcs-only,ihcs-only,combined",
                   help="comma list of systems (default all)")
    p.add_argument("--users", default="5,10,15,20,25",
                   help="comma list of user counts")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("curve", help="sample comfort error and energy over a TDI grid")
    _add_common_flags(p, baseline=False)
    p.add_argument("--mode", choices=MODES, default="cooling")
    p.add_argument("--users", type=int, default=5)
    p.add_argument("--tdi-range", default="55:85:0.5", metavar="LO:HI:STEP")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("reduction",
                       help="energy saving of the combined system vs the baseline")
    _add_common_flags(p)
    p.add_argument("--mode", choices=MODES, default="cooling")
    p.add_argument("--users", default="5,10,15,20,25",
                   help="comma list of user counts")
    p.set_defaults(func=cmd_reduction)

    p = sub.add_parser("defaults", help="print the effective default configuration")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_defaults)

    p = sub.add_parser("report",
                       help="write figures and CSV tables for the standard sweeps")
    _add_common_flags(p, out=False)
    p.add_argument("--mode", default="cooling,heating",
                   help="comma list of modes (default both)")
    p.add_argument("--users", default="5,10,15,20,25",
                   help="comma list of user counts")
    p.add_argument("--out-dir", default="reports",
                   help="directory for figures and tables")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
