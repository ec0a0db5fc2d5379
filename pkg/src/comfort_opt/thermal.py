"""Room energy model: conditioning, infiltration, occupant heat, and totals.

Sign convention: positive heat is heat added to the room air. Conditioning
heat (hv) is therefore positive in heating season and negative in cooling
season; infiltration heat (hf) has the opposite sign of hv because outside
air pulls the room back toward the outdoor state. Occupant heat (hp) is
always nonnegative. The room-system consumption is

    he = alpha * |hv - hf - hp|

so occupant heat compounds the cooling load and offsets the heating load.
All energies are kJ; the CLI additionally reports kWh (kJ / 3600).
"""

from dataclasses import dataclass

from .errors import DomainError
from .psychro import AirState, PsychroConstants, moist_air_enthalpy

KJ_PER_WH = 3.6


@dataclass(frozen=True)
class RoomSpec:
    """Room geometry and air-exchange characteristics."""

    volume: float                 # m^3
    air_density: float = 1.2      # kg/m^3
    ach: float = 0.5              # air changes per hour

    def __post_init__(self):
        if self.volume <= 0:
            raise DomainError(f"room volume must be positive, got {self.volume}")
        if self.air_density <= 0:
            raise DomainError(f"air density must be positive, got {self.air_density}")
        if self.ach < 0:
            raise DomainError(f"air change rate must be nonnegative, got {self.ach}")

    @property
    def air_mass(self) -> float:
        """Mass of air held by the room, kg."""
        return self.volume * self.air_density


@dataclass(frozen=True)
class ThermalParams:
    """Tunable constants of the energy model.

    alpha         room-system load factor applied to the net heat balance
    occupant_heat metabolic heat per person, W
    ihcs_coeff    wearable device draw per correction step per person, W
    duration      scenario length, hours
    """

    alpha: float = 1.0
    occupant_heat: float = 100.0
    ihcs_coeff: float = 4.0
    duration: float = 1.0

    def __post_init__(self):
        if self.alpha <= 0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if self.occupant_heat < 0:
            raise DomainError("occupant heat must be nonnegative")
        if self.ihcs_coeff < 0:
            raise DomainError("wearable power coefficient must be nonnegative")
        if self.duration <= 0:
            raise DomainError(f"duration must be positive, got {self.duration}")


@dataclass(frozen=True)
class HeatBreakdown:
    """Energy figures for one scenario, kJ.

    hv: conditioning heat (signed), hf: infiltration heat (signed),
    hp: occupant heat, he: room-system consumption, ihcs: wearable
    consumption, thc: total consumption (he + ihcs).
    """

    hv: float
    hf: float
    hp: float
    he: float
    ihcs: float
    thc: float

    def __post_init__(self):
        if self.hp < 0 or self.he < 0 or self.ihcs < 0 or self.thc < 0:
            raise DomainError("hp, he, ihcs, and thc must be nonnegative")
        if abs(self.thc - (self.he + self.ihcs)) > 1e-9 * max(1.0, self.thc):
            raise DomainError("thc must equal he + ihcs")


def conditioning_heat(room: RoomSpec, outside: AirState, target: AirState,
                      consts: PsychroConstants = PsychroConstants()) -> float:
    """Heat to move the room air from the outside state to the target, kJ.

    Positive means heat must be added (heating), negative removed (cooling).
    Linear in the room's air mass.
    """
    dh = moist_air_enthalpy(target, consts) - moist_air_enthalpy(outside, consts)
    return room.air_mass * dh


def infiltration_heat(room: RoomSpec, outside: AirState, target: AirState,
                      duration: float,
                      consts: PsychroConstants = PsychroConstants()) -> float:
    """Heat carried into the room by air exchange over the duration, kJ.

    ach air volumes per hour are swapped with outside air held at the
    target state. Positive when outside air warms the room (cooling
    season), negative when it cools it (heating season).
    """
    if duration <= 0:
        raise DomainError(f"duration must be positive, got {duration}")
    dh = moist_air_enthalpy(outside, consts) - moist_air_enthalpy(target, consts)
    return room.ach * room.air_mass * duration * dh


def occupant_heat(n: int, params: ThermalParams) -> float:
    """Metabolic heat released by n occupants over the duration, kJ."""
    if n < 0:
        raise DomainError(f"occupant count must be nonnegative, got {n}")
    return n * params.occupant_heat * params.duration * KJ_PER_WH


def ghcs_consumption(params: ThermalParams, hv: float, hf: float, hp: float) -> float:
    """Room-system consumption: alpha times the absolute net heat balance, kJ."""
    return params.alpha * abs(hv - hf - hp)


def ihcs_consumption(dn, params: ThermalParams) -> float:
    """Total wearable consumption for a correction vector, kJ.

    Each occupant's device draws ihcs_coeff watts per correction step,
    independent of direction.
    """
    total_steps = sum(abs(d) for d in dn)
    return params.ihcs_coeff * total_steps * params.duration * KJ_PER_WH


def total_heat_consumption(he: float, ihcs: float) -> float:
    """Combined room-system and wearable consumption, kJ."""
    if he < 0 or ihcs < 0:
        raise DomainError("consumptions must be nonnegative")
    return he + ihcs


def heat_breakdown(room: RoomSpec, outside: AirState, target: AirState,
                   n_users: int, dn, params: ThermalParams,
                   consts: PsychroConstants = PsychroConstants()) -> HeatBreakdown:
    """Full energy pipeline with the room system running at a target state."""
    hv = conditioning_heat(room, outside, target, consts)
    hf = infiltration_heat(room, outside, target, params.duration, consts)
    hp = occupant_heat(n_users, params)
    he = ghcs_consumption(params, hv, hf, hp)
    ihcs = ihcs_consumption(dn, params)
    return HeatBreakdown(hv, hf, hp, he, ihcs, total_heat_consumption(he, ihcs))


def heat_breakdown_ghcs_off(n_users: int, dn, params: ThermalParams) -> HeatBreakdown:
    """Energy pipeline with the room system off (wearables only).

    Occupant heat is still released, but the room system consumes nothing,
    so hv = hf = he = 0 and the total is the wearable consumption alone.
    """
    hp = occupant_heat(n_users, params)
    ihcs = ihcs_consumption(dn, params)
    return HeatBreakdown(0.0, 0.0, hp, 0.0, ihcs, ihcs)
