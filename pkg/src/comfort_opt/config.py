"""Run configuration: JSON document schema, defaults, strict validation.

A config document mirrors a scenario. Missing fields take the documented
defaults below; unknown fields are rejected with a diagnostic naming the
field. Structural problems (bad JSON, unknown or mistyped fields) raise
ConfigError; value-range problems surface later as DomainError when the
scenario is built.
"""

import copy
import json

from .comfort import SEEDED_RANDOM, STRATIFIED, ComfortBand, IhcsRange
from .control import GHCS_POLICIES
from .errors import ConfigError
from .psychro import AirState
from .sim import MODES, SYSTEMS, Scenario, table1_volume
from .thermal import RoomSpec, ThermalParams

FORMATS = ("json", "csv")

DEFAULT_CONFIG = {
    "mode": "cooling",
    "system": "combined",
    "n_users": 5,
    "volume_m3": None,
    "outside": None,
    "band": {"lower": 65.0, "upper": 70.0},
    "ihcs": {"min_dn": -5, "max_dn": 5},
    "thermal": {
        "alpha": 1.0,
        "occupant_heat_w": 100.0,
        "ihcs_coeff_w": 4.0,
        "duration_h": 1.0,
        "ach": 0.5,
        "air_density": 1.2,
    },
    "population": {"mode": "stratified", "sigma": 1.5, "seed": 0},
    "setpoint_rh_pct": 60.0,
    "baseline_setpoint": "nearest",
    "format": "json",
    "out": None,
}

_POPULATION_MODES = (STRATIFIED, "random", SEEDED_RANDOM)


def default_config() -> dict:
    """A deep copy of the full effective default configuration."""
    return copy.deepcopy(DEFAULT_CONFIG)


def load_config(path: str) -> dict:
    """Parse and validate a config file, returning the merged document."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}"
        ) from exc
    return validate_config(doc)


def _fail(path, expected, value):
    raise ConfigError(f"field '{path}': expected {expected}, got {value!r}")


def _number(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, "a number", value)
    return float(value)


def _integer(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, "an integer", value)
    return value


def _choice(value, path, choices):
    if value not in choices:
        _fail(path, "one of " + ", ".join(repr(c) for c in choices), value)
    return value


def _object(doc, path, fields):
    """Merge one nested section against its defaults, rejecting unknowns."""
    merged = dict(fields)
    if doc is None:
        return merged
    if not isinstance(doc, dict):
        _fail(path, "an object", doc)
    for key, value in doc.items():
        if key not in fields:
            raise ConfigError(f"unknown field '{path}.{key}'")
        merged[key] = value
    return merged


def validate_config(doc: dict) -> dict:
    """Check a raw document against the schema and fill in defaults."""
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a JSON object")
    for key in doc:
        if key not in DEFAULT_CONFIG:
            raise ConfigError(f"unknown field '{key}'")

    cfg = default_config()
    if "mode" in doc:
        cfg["mode"] = _choice(doc["mode"], "mode", MODES)
    if "system" in doc:
        cfg["system"] = _choice(doc["system"], "system", SYSTEMS)
    if "n_users" in doc:
        cfg["n_users"] = _integer(doc["n_users"], "n_users")
    if "volume_m3" in doc and doc["volume_m3"] is not None:
        cfg["volume_m3"] = _number(doc["volume_m3"], "volume_m3")
    if "outside" in doc and doc["outside"] is not None:
        section = _object(doc["outside"], "outside", {"t_c": None, "rh_pct": None})
        for key in ("t_c", "rh_pct"):
            if section[key] is None:
                raise ConfigError(f"field 'outside.{key}' is required when outside is set")
        cfg["outside"] = {
            "t_c": _number(section["t_c"], "outside.t_c"),
            "rh_pct": _number(section["rh_pct"], "outside.rh_pct"),
        }
    if "band" in doc:
        section = _object(doc["band"], "band", DEFAULT_CONFIG["band"])
        cfg["band"] = {k: _number(v, f"band.{k}") for k, v in section.items()}
    if "ihcs" in doc:
        section = _object(doc["ihcs"], "ihcs", DEFAULT_CONFIG["ihcs"])
        cfg["ihcs"] = {k: _integer(v, f"ihcs.{k}") for k, v in section.items()}
    if "thermal" in doc:
        section = _object(doc["thermal"], "thermal", DEFAULT_CONFIG["thermal"])
        cfg["thermal"] = {k: _number(v, f"thermal.{k}") for k, v in section.items()}
    if "population" in doc:
        section = _object(doc["population"], "population", DEFAULT_CONFIG["population"])
        cfg["population"] = {
            "mode": _choice(section["mode"], "population.mode", _POPULATION_MODES),
            "sigma": _number(section["sigma"], "population.sigma"),
            "seed": _integer(section["seed"], "population.seed"),
        }
    if "setpoint_rh_pct" in doc:
        cfg["setpoint_rh_pct"] = _number(doc["setpoint_rh_pct"], "setpoint_rh_pct")
    if "baseline_setpoint" in doc:
        cfg["baseline_setpoint"] = _choice(doc["baseline_setpoint"],
                                           "baseline_setpoint", GHCS_POLICIES)
    if "format" in doc:
        cfg["format"] = _choice(doc["format"], "format", FORMATS)
    if "out" in doc and doc["out"] is not None:
        if not isinstance(doc["out"], str):
            _fail("out", "a path string", doc["out"])
        cfg["out"] = doc["out"]
    return cfg


def scenario_from_config(cfg: dict) -> Scenario:
    """Build a runnable scenario from a validated config document."""
    outside = None
    if cfg["outside"] is not None:
        outside = AirState(cfg["outside"]["t_c"], cfg["outside"]["rh_pct"])
    volume = cfg["volume_m3"]
    if volume is None:
        volume = table1_volume(cfg["n_users"])
    th = cfg["thermal"]
    pop_mode = cfg["population"]["mode"]
    if pop_mode == "random":
        pop_mode = SEEDED_RANDOM
    return Scenario(
        mode=cfg["mode"],
        system=cfg["system"],
        n_users=cfg["n_users"],
        outside=outside,
        room=RoomSpec(volume, air_density=th["air_density"], ach=th["ach"]),
        band=ComfortBand(cfg["band"]["lower"], cfg["band"]["upper"]),
        ihcs=IhcsRange(cfg["ihcs"]["min_dn"], cfg["ihcs"]["max_dn"]),
        thermal=ThermalParams(alpha=th["alpha"],
                              occupant_heat=th["occupant_heat_w"],
                              ihcs_coeff=th["ihcs_coeff_w"],
                              duration=th["duration_h"]),
        population_mode=pop_mode,
        sigma=cfg["population"]["sigma"],
        seed=cfg["population"]["seed"],
        setpoint_rh=cfg["setpoint_rh_pct"],
        baseline_policy=cfg["baseline_setpoint"],
    )
