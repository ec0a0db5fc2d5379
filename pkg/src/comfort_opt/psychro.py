"""Discomfort index and moist-air heat content formulas.

All functions here are pure: same input, bit-identical output. Temperatures
are dry-bulb degrees Celsius, relative humidity is percent (0-100),
pressures are kilopascals, and specific enthalpy is kJ per kg of dry air.

The model validity window is -20 to 50 degC, wide enough to cover both the
cooling (30 degC) and heating (12 degC) outdoor states with margin.
Inputs outside the window are rejected, never extrapolated.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

T_MIN = -20.0
T_MAX = 50.0


@dataclass(frozen=True)
class AirState:
    """A body of air: dry-bulb temperature (degC) and relative humidity (%)."""

    t: float
    rh: float

    def __post_init__(self):
        if not T_MIN <= self.t <= T_MAX:
            raise DomainError(
                f"temperature {self.t} degC outside validity window "
                f"[{T_MIN}, {T_MAX}]"
            )
        if not 0.0 <= self.rh <= 100.0:
            raise DomainError(f"relative humidity {self.rh}% outside [0, 100]")


@dataclass(frozen=True)
class PsychroConstants:
    """Constants of the moist-air enthalpy model.

    p_atm     atmospheric pressure, kPa
    cp_dry    specific heat of dry air, kJ/(kg K)
    h_latent0 latent heat of vaporization at 0 degC, kJ/kg
    cp_vapor  specific heat of water vapor, kJ/(kg K)
    """

    p_atm: float = 101.325
    cp_dry: float = 1.006
    h_latent0: float = 2501.0
    cp_vapor: float = 1.86

    def __post_init__(self):
        for name in ("p_atm", "cp_dry", "h_latent0", "cp_vapor"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be strictly positive")


def discomfort_index(air: AirState) -> float:
    """Temperature-humidity discomfort index of an air state.

    DI = 0.81 t + 0.01 rh (0.99 t - 14.3) + 46.3. Dimensionless; values
    between 65 and 70 are generally felt as comfortable.
    """
    return 0.81 * air.t + 0.01 * air.rh * (0.99 * air.t - 14.3) + 46.3


def temperature_for_di(di: float, rh: float) -> float:
    """Invert the discomfort index at a fixed relative humidity.

    Returns the dry-bulb temperature t (degC) such that an air state
    (t, rh) has discomfort index `di`. The index is affine in t at fixed
    humidity, so the inversion is exact:

        t = (di - 46.3 + 0.143 rh) / (0.81 + 0.0099 rh)

    Raises DomainError if rh is out of range or the solved temperature
    leaves the validity window.
    """
    if not 0.0 <= rh <= 100.0:
        raise DomainError(f"relative humidity {rh}% outside [0, 100]")
    t = (di - 46.3 + 0.143 * rh) / (0.81 + 0.0099 * rh)
    # round-trip solutions may overshoot the window edge by float noise
    if T_MIN - 1e-9 <= t < T_MIN:
        t = T_MIN
    elif T_MAX < t <= T_MAX + 1e-9:
        t = T_MAX
    if not T_MIN <= t <= T_MAX:
        raise DomainError(
            f"target index {di} at {rh}% humidity needs {t:.2f} degC, "
            f"outside [{T_MIN}, {T_MAX}]"
        )
    return t


def saturation_vapor_pressure(t: float) -> float:
    """Saturation vapor pressure of water in kPa (Tetens formula)."""
    if not T_MIN <= t <= T_MAX:
        raise DomainError(
            f"temperature {t} degC outside validity window [{T_MIN}, {T_MAX}]"
        )
    return 0.61078 * math.exp(17.27 * t / (t + 237.3))


def humidity_ratio(air: AirState, consts: PsychroConstants = PsychroConstants()) -> float:
    """Humidity ratio in kg of water vapor per kg of dry air.

    x = 0.622 pv / (p_atm - pv) with pv the partial vapor pressure.
    Raises DomainError if pv reaches atmospheric pressure.
    """
    pv = air.rh / 100.0 * saturation_vapor_pressure(air.t)
    if pv >= consts.p_atm:
        raise DomainError(
            f"vapor pressure {pv:.3f} kPa at or above atmospheric "
            f"{consts.p_atm:.3f} kPa"
        )
    return 0.622 * pv / (consts.p_atm - pv)


def moist_air_enthalpy(air: AirState, consts: PsychroConstants = PsychroConstants()) -> float:
    """Specific enthalpy of moist air, kJ per kg of dry air.

    Sensible heat of the dry air plus latent and sensible heat of the
    vapor it carries: cp_dry t + x (h_latent0 + cp_vapor t). Zero at the
    dry 0 degC reference state.
    """
    x = humidity_ratio(air, consts)
    return consts.cp_dry * air.t + x * (consts.h_latent0 + consts.cp_vapor * air.t)
