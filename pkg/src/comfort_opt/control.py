"""Room setpoint optimization combining the room system with wearables.

The decision variable is the room's target discomfort index (TDI). For a
population with offsets dp_i and devices spanning [min_dn, max_dn], occupant
i can be made comfortable exactly when the TDI lies in

    [band.lower - dp_i - max_dn,  band.upper - dp_i - min_dn]

so the set of TDI values where the summed comfort error reaches zero is the
intersection of these per-occupant intervals. Comfort is optimized first and
energy second: among zero-error TDI values, the one nearest the current
environmental index needs the least conditioning work, so the optimal TDI is
the projection of the environmental index onto the feasible interval.
"""

from dataclasses import dataclass

from .comfort import ComfortBand, IhcsRange, Population, comfort_error, sdi, total_error
from .errors import DomainError
from .psychro import AirState, PsychroConstants, temperature_for_di
from .thermal import RoomSpec, ThermalParams, heat_breakdown

GHCS_POLICIES = ("nearest", "center", "min-es")


@dataclass(frozen=True)
class ControlDecision:
    """A chosen room index, the setpoint realizing it, and device corrections."""

    tdi: float
    setpoint: AirState
    dn: tuple
    es: float


@dataclass(frozen=True)
class CurvePoint:
    """One sample of the comfort-error / energy tradeoff at a fixed TDI."""

    tdi: float
    es: float
    he: float
    ihcs: float
    thc: float


def feasible_tdi_interval(pop: Population, band: ComfortBand,
                          ihcs: IhcsRange):
    """TDI interval on which every occupant can reach zero comfort error.

    Returns (lo, hi) as a closed interval, or None when the intersection is
    empty (impossible with the default band and correction range).
    """
    if len(pop) == 0:
        raise DomainError("population must not be empty")
    lo = max(band.lower - o.dp - ihcs.max_dn for o in pop.occupants)
    hi = min(band.upper - o.dp - ihcs.min_dn for o in pop.occupants)
    if lo > hi:
        return None
    return (lo, hi)


def assign_dn(tdi: float, pop: Population, band: ComfortBand,
              ihcs: IhcsRange) -> tuple:
    """Best device correction per occupant at a given room index.

    Each occupant independently gets the integer step minimizing their
    comfort error; ties prefer the smallest device effort |dn|, then the
    step whose result lies nearest the band midpoint, then the smaller
    step. Fully deterministic.
    """
    mid = band.midpoint
    out = []
    for occ in pop.occupants:
        best = min(
            ihcs.steps(),
            key=lambda d: (
                comfort_error(sdi(tdi, occ.dp, d), band),
                abs(d),
                abs(sdi(tdi, occ.dp, d) - mid),
                d,
            ),
        )
        out.append(best)
    return tuple(out)


def _es_at(tdi: float, pop: Population, band: ComfortBand,
           ihcs: IhcsRange) -> float:
    return total_error(pop, tdi, assign_dn(tdi, pop, band, ihcs), band)


def optimal_tdi(env_di: float, pop: Population, band: ComfortBand,
                ihcs: IhcsRange) -> float:
    """TDI minimizing comfort error first, conditioning energy second.

    Projects the environmental index onto the zero-error interval. When
    that interval is empty (only possible with non-default correction
    ranges), falls back to the error-minimizing TDI, tie-broken toward
    the environmental index.
    """
    interval = feasible_tdi_interval(pop, band, ihcs)
    if interval is not None:
        lo, hi = interval
        return min(max(env_di, lo), hi)
    # Es is piecewise linear in tdi with breakpoints where some occupant's
    # corrected index meets a band edge; the minimum sits on a breakpoint.
    candidates = {env_di}
    for occ in pop.occupants:
        for d in ihcs.steps():
            candidates.add(band.lower - occ.dp - d)
            candidates.add(band.upper - occ.dp - d)
    return min(
        sorted(candidates),
        key=lambda t: (_es_at(t, pop, band, ihcs), abs(t - env_di), t),
    )


def _setpoint_for(tdi: float, setpoint_rh: float) -> AirState:
    return AirState(temperature_for_di(tdi, setpoint_rh), setpoint_rh)


def combined_decision(env_di: float, pop: Population, band: ComfortBand,
                      ihcs: IhcsRange, setpoint_rh: float = 60.0) -> ControlDecision:
    """Jointly optimal room index and device corrections."""
    tdi = optimal_tdi(env_di, pop, band, ihcs)
    dn = assign_dn(tdi, pop, band, ihcs)
    es = total_error(pop, tdi, dn, band)
    return ControlDecision(tdi, _setpoint_for(tdi, setpoint_rh), dn, es)


def ghcs_only_decision(env_di: float, pop: Population, band: ComfortBand,
                       policy: str = "nearest",
                       setpoint_rh: float = 60.0) -> ControlDecision:
    """Baseline: room system alone, all device corrections zero.

    The room index is chosen inside the comfort band per `policy`:
    nearest (default) clamps the environmental index into the band, which
    favors energy; center holds the band midpoint; min-es picks the
    error-minimizing index in the band, tie-broken toward the
    environmental index.
    """
    if len(pop) == 0:
        raise DomainError("population must not be empty")
    if policy == "nearest":
        tdi = min(max(env_di, band.lower), band.upper)
    elif policy == "center":
        tdi = band.midpoint
    elif policy == "min-es":
        candidates = {band.lower, band.upper, min(max(env_di, band.lower), band.upper)}
        for occ in pop.occupants:
            for edge in (band.lower - occ.dp, band.upper - occ.dp):
                if band.lower <= edge <= band.upper:
                    candidates.add(edge)
        zeros = [0] * len(pop)
        tdi = min(
            sorted(candidates),
            key=lambda t: (total_error(pop, t, zeros, band), abs(t - env_di), t),
        )
    else:
        raise DomainError(f"unknown baseline policy {policy!r}; expected one of {GHCS_POLICIES}")
    dn = tuple([0] * len(pop))
    es = total_error(pop, tdi, dn, band)
    return ControlDecision(tdi, _setpoint_for(tdi, setpoint_rh), dn, es)


def ihcs_only_decision(env_di: float, pop: Population, band: ComfortBand,
                       ihcs: IhcsRange, setpoint_rh: float = 60.0) -> ControlDecision:
    """Baseline: wearables alone, room held at the outdoor-driven index."""
    if len(pop) == 0:
        raise DomainError("population must not be empty")
    dn = assign_dn(env_di, pop, band, ihcs)
    es = total_error(pop, env_di, dn, band)
    return ControlDecision(env_di, _setpoint_for(env_di, setpoint_rh), dn, es)


def tdi_curve(outside: AirState, room: RoomSpec, pop: Population,
              band: ComfortBand, ihcs: IhcsRange, params: ThermalParams,
              consts: PsychroConstants, setpoint_rh: float,
              tdi_lo: float, tdi_hi: float, step: float) -> list:
    """Sample comfort error and energy over a TDI grid.

    The grid runs from tdi_lo to tdi_hi inclusive in the given step. Each
    sample applies the per-occupant correction rule and the full energy
    pipeline at that TDI. Doubles as a brute-force check of the
    closed-form optimum: the grid's lexicographic (es, thc) minimizer
    lands within one step of it.
    """
    if not tdi_lo < tdi_hi:
        raise DomainError(f"empty grid: lo {tdi_lo} must be below hi {tdi_hi}")
    if step <= 0:
        raise DomainError(f"grid step must be positive, got {step}")
    n_points = int((tdi_hi - tdi_lo) / step + 1e-9) + 1
    points = []
    for k in range(n_points):
        tdi = round(tdi_lo + k * step, 12)
        dn = assign_dn(tdi, pop, band, ihcs)
        es = total_error(pop, tdi, dn, band)
        heat = heat_breakdown(room, outside, _setpoint_for(tdi, setpoint_rh),
                              len(pop), dn, params, consts)
        points.append(CurvePoint(tdi, es, heat.he, heat.ihcs, heat.thc))
    return points
