import math

import pytest

from comfort_opt.errors import DomainError
from comfort_opt.psychro import (
    AirState,
    PsychroConstants,
    discomfort_index,
    humidity_ratio,
    moist_air_enthalpy,
    saturation_vapor_pressure,
    temperature_for_di,
)

# High-precision reference values computed independently (mpmath, 30 digits).
PSAT_30 = 4.242926124081255
PSAT_12 = 1.402517947576326
X_30_60 = 0.016030290981862982
H_30_60 = 71.16624798242727
H_12_60 = 25.216004080159523


def test_discomfort_index_reference_points():
    assert discomfort_index(AirState(30, 60)) == pytest.approx(79.84, abs=1e-9)
    assert discomfort_index(AirState(12, 60)) == pytest.approx(54.568, abs=1e-9)
    assert discomfort_index(AirState(0, 0)) == pytest.approx(46.3, abs=1e-9)


def test_discomfort_index_rejects_invalid_states():
    with pytest.raises(DomainError):
        AirState(55, 50)
    with pytest.raises(DomainError):
        AirState(-25, 50)
    with pytest.raises(DomainError):
        AirState(20, 101)
    with pytest.raises(DomainError):
        AirState(20, -1)


def test_temperature_for_di_closed_form():
    assert temperature_for_di(70, 60) == pytest.approx(22.991452991452992, abs=1e-12)
    assert temperature_for_di(46.3, 0) == pytest.approx(0.0, abs=1e-12)
    assert temperature_for_di(79.84, 60) == pytest.approx(30.0, abs=1e-12)


def test_temperature_for_di_domain_errors():
    with pytest.raises(DomainError):
        temperature_for_di(70, 120)
    with pytest.raises(DomainError):
        temperature_for_di(200, 60)  # solves far above the window
    with pytest.raises(DomainError):
        temperature_for_di(5, 60)  # solves far below the window


def test_round_trip_on_grid():
    for t in range(-20, 51, 2):
        for rh in range(0, 101, 10):
            air = AirState(float(t), float(rh))
            di = discomfort_index(air)
            assert temperature_for_di(di, air.rh) == pytest.approx(air.t, abs=1e-9)


def test_saturation_vapor_pressure():
    assert saturation_vapor_pressure(0) == pytest.approx(0.61078, abs=1e-12)
    assert saturation_vapor_pressure(30) == pytest.approx(PSAT_30, rel=1e-12)
    assert saturation_vapor_pressure(12) == pytest.approx(PSAT_12, rel=1e-12)
    with pytest.raises(DomainError):
        saturation_vapor_pressure(60)


def test_humidity_ratio():
    assert humidity_ratio(AirState(25, 0)) == 0.0
    assert humidity_ratio(AirState(30, 60)) == pytest.approx(X_30_60, rel=1e-12)
    assert humidity_ratio(AirState(12, 60)) == pytest.approx(0.005209011968422365, rel=1e-12)


def test_humidity_ratio_vapor_pressure_guard():
    with pytest.raises(DomainError):
        humidity_ratio(AirState(45, 100), PsychroConstants(p_atm=5.0))


def test_moist_air_enthalpy():
    assert moist_air_enthalpy(AirState(0, 0)) == 0.0
    assert moist_air_enthalpy(AirState(30, 60)) == pytest.approx(H_30_60, rel=1e-12)
    assert moist_air_enthalpy(AirState(12, 60)) == pytest.approx(H_12_60, rel=1e-12)
    # coarse psychrometric-chart cross-check
    assert moist_air_enthalpy(AirState(30, 60)) == pytest.approx(71.2, abs=0.1)
    assert moist_air_enthalpy(AirState(12, 60)) == pytest.approx(25.2, abs=0.1)


def test_constants_must_be_positive():
    with pytest.raises(DomainError):
        PsychroConstants(p_atm=0.0)
    with pytest.raises(DomainError):
        PsychroConstants(cp_dry=-1.0)


def test_di_strictly_increasing_in_temperature():
    for rh in range(0, 101, 5):
        previous = None
        for t in range(-20, 51):
            di = discomfort_index(AirState(float(t), float(rh)))
            if previous is not None:
                assert di > previous
            previous = di


def test_di_humidity_slope_changes_sign_at_crossover():
    # d(DI)/d(rh) has the sign of 0.99 t - 14.3, zero near 14.44 degC
    for t in [-20, -5, 0, 10, 14.4]:
        assert discomfort_index(AirState(t, 80)) < discomfort_index(AirState(t, 20))
    for t in [14.5, 20, 30, 40, 50]:
        assert discomfort_index(AirState(t, 80)) > discomfort_index(AirState(t, 20))


def test_enthalpy_monotone_in_t_and_rh():
    for rh in (0, 30, 60, 100):
        values = [moist_air_enthalpy(AirState(float(t), rh)) for t in range(-20, 51, 5)]
        assert all(b > a for a, b in zip(values, values[1:]))
    for t in (5, 20, 35, 50):
        values = [moist_air_enthalpy(AirState(t, float(rh))) for rh in range(0, 101, 10)]
        assert all(b > a for a, b in zip(values, values[1:]))


def test_operations_are_pure():
    air = AirState(23.456, 61.2)
    assert discomfort_index(air) == discomfort_index(AirState(23.456, 61.2))
    assert moist_air_enthalpy(air) == moist_air_enthalpy(AirState(23.456, 61.2))
    assert saturation_vapor_pressure(23.456) == saturation_vapor_pressure(23.456)
    assert math.isfinite(discomfort_index(air))
