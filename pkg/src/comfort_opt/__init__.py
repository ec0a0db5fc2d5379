"""Deterministic simulator and optimizer for combined room/wearable
heating-cooling control.

The library models per-occupant thermal comfort through a discomfort
index, the energy cost of conditioning a room against an outdoor state,
and the room target index that keeps every occupant comfortable at
minimal total consumption.
"""

from .comfort import (
    ComfortBand,
    IhcsRange,
    Occupant,
    Population,
    comfort_error,
    population_from_dps,
    sample_population,
    sdi,
    total_error,
)
from .control import (
    ControlDecision,
    CurvePoint,
    assign_dn,
    combined_decision,
    feasible_tdi_interval,
    ghcs_only_decision,
    ihcs_only_decision,
    optimal_tdi,
    tdi_curve,
)
from .errors import ConfigError, DomainError
from .psychro import (
    AirState,
    PsychroConstants,
    discomfort_index,
    humidity_ratio,
    moist_air_enthalpy,
    saturation_vapor_pressure,
    temperature_for_di,
)
from .sim import (
    Scenario,
    ScenarioResult,
    reduction_ratio,
    run_scenario,
    sweep,
    table1_volume,
)
from .thermal import (
    HeatBreakdown,
    RoomSpec,
    ThermalParams,
    conditioning_heat,
    ghcs_consumption,
    heat_breakdown,
    ihcs_consumption,
    infiltration_heat,
    occupant_heat,
    total_heat_consumption,
)

__version__ = "0.1.0"
