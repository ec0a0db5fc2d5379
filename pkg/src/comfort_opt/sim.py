"""Scenario assembly and sweeps over modes, systems, and occupancy.

A scenario binds the outdoor state, room geometry, population recipe, and
model constants together; running it dispatches to the matching controller
and evaluates the energy pipeline. Everything is deterministic: identical
scenarios produce bit-identical results regardless of evaluation order.
"""

from dataclasses import dataclass

from . import control
from .comfort import (
    STRATIFIED,
    ComfortBand,
    IhcsRange,
    Population,
    sample_population,
)
from .control import ControlDecision
from .errors import DomainError
from .psychro import AirState, PsychroConstants, discomfort_index
from .thermal import (
    HeatBreakdown,
    RoomSpec,
    ThermalParams,
    heat_breakdown,
    heat_breakdown_ghcs_off,
)

MODES = ("cooling", "heating")
SYSTEMS = ("ghcs-only", "ihcs-only", "combined")

DEFAULT_OUTSIDE = {
    "cooling": AirState(30.0, 60.0),
    "heating": AirState(12.0, 60.0),
}

# Standard room volume per maximum occupancy (m^3); other counts are
# resolved at 34.45 m^3 per user, which the listed values follow closely.
STANDARD_VOLUMES = {5: 172.3, 10: 344.5, 15: 516.8, 20: 689.0, 25: 861.3}
VOLUME_PER_USER = 34.45


def table1_volume(n_users: int) -> float:
    """Standard room volume for a user count, m^3."""
    if n_users < 1:
        raise DomainError(f"user count must be at least 1, got {n_users}")
    return STANDARD_VOLUMES.get(n_users, VOLUME_PER_USER * n_users)


@dataclass(frozen=True)
class Scenario:
    """Full input configuration of one simulation run."""

    mode: str = "cooling"
    system: str = "combined"
    n_users: int = 5
    outside: AirState = None
    room: RoomSpec = None
    band: ComfortBand = ComfortBand()
    ihcs: IhcsRange = IhcsRange()
    thermal: ThermalParams = ThermalParams()
    psychro: PsychroConstants = PsychroConstants()
    population_mode: str = STRATIFIED
    sigma: float = 1.5
    seed: int = 0
    setpoint_rh: float = 60.0
    baseline_policy: str = "nearest"

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.system not in SYSTEMS:
            raise DomainError(f"unknown system {self.system!r}; expected one of {SYSTEMS}")
        if self.n_users < 1:
            raise DomainError(f"user count must be at least 1, got {self.n_users}")
        if self.outside is None:
            object.__setattr__(self, "outside", DEFAULT_OUTSIDE[self.mode])
        if self.room is None:
            object.__setattr__(self, "room", RoomSpec(table1_volume(self.n_users)))

    def population(self) -> Population:
        return sample_population(self.n_users, self.population_mode,
                                 self.seed, self.sigma)


@dataclass(frozen=True)
class ScenarioResult:
    """Outcome of one scenario: the decision taken and the energy it costs."""

    scenario: Scenario
    population: Population
    decision: ControlDecision
    heat: HeatBreakdown
    env_di: float

    @property
    def es(self) -> float:
        return self.decision.es

    @property
    def thc(self) -> float:
        return self.heat.thc


def run_scenario(s: Scenario) -> ScenarioResult:
    """Run one scenario end to end."""
    pop = s.population()
    env_di = discomfort_index(s.outside)
    if s.system == "combined":
        decision = control.combined_decision(env_di, pop, s.band, s.ihcs,
                                             s.setpoint_rh)
    elif s.system == "ghcs-only":
        decision = control.ghcs_only_decision(env_di, pop, s.band,
                                              s.baseline_policy, s.setpoint_rh)
    else:
        decision = control.ihcs_only_decision(env_di, pop, s.band, s.ihcs,
                                              s.setpoint_rh)
    if s.system == "ihcs-only":
        heat = heat_breakdown_ghcs_off(s.n_users, decision.dn, s.thermal)
    else:
        heat = heat_breakdown(s.room, s.outside, decision.setpoint, s.n_users,
                              decision.dn, s.thermal, s.psychro)
    return ScenarioResult(s, pop, decision, heat, env_di)


def sweep(modes=MODES, systems=SYSTEMS, user_counts=(5, 10, 15, 20, 25),
          **overrides) -> list:
    """Run the Cartesian product of modes, systems, and user counts.

    Results come back mode-major, then system, then user count, with modes
    and systems in their canonical order however the inputs were given.
    Keyword overrides are applied to every scenario.
    """
    modes = [m for m in MODES if m in set(modes)]
    systems = [s for s in SYSTEMS if s in set(systems)]
    if not modes or not systems or not list(user_counts):
        raise DomainError("sweep needs at least one mode, system, and user count")
    results = []
    for mode in modes:
        for system in systems:
            for n in user_counts:
                results.append(run_scenario(
                    Scenario(mode=mode, system=system, n_users=n, **overrides)))
    return results


def reduction_ratio(baseline: ScenarioResult, proposed: ScenarioResult) -> float:
    """Fractional energy saving of `proposed` relative to `baseline`."""
    if (baseline.scenario.mode != proposed.scenario.mode
            or baseline.scenario.n_users != proposed.scenario.n_users):
        raise DomainError("reduction ratio needs matching mode and user count")
    if baseline.thc <= 0:
        raise DomainError("baseline consumption must be positive")
    return (baseline.thc - proposed.thc) / baseline.thc
