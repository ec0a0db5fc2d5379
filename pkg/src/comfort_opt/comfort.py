"""Occupant population model, per-person sensed discomfort, and comfort error.

Each occupant perceives the room's discomfort index shifted by a personal
offset dp (an integer level from -3 to +3, normally distributed across the
population) and by the correction dn applied by their wearable device
(an integer step from -5 to +5). The sensed index is

    sdi = tdi + dp + dn

and an occupant is comfortable when sdi falls inside the comfort band.
"""

import random
from dataclasses import dataclass
from statistics import NormalDist

from .errors import DomainError

DP_MIN = -3
DP_MAX = 3

STRATIFIED = "stratified"
SEEDED_RANDOM = "seeded-random"

_STD_NORMAL = NormalDist()


@dataclass(frozen=True)
class Occupant:
    """One occupant: index and personal comfort offset in DI units."""

    id: int
    dp: int

    def __post_init__(self):
        if not isinstance(self.dp, int) or isinstance(self.dp, bool):
            raise DomainError(f"occupant offset must be an integer, got {self.dp!r}")
        if not DP_MIN <= self.dp <= DP_MAX:
            raise DomainError(
                f"occupant offset {self.dp} outside [{DP_MIN}, {DP_MAX}]"
            )


@dataclass(frozen=True)
class Population:
    """An ordered set of occupants plus the sampling recipe that produced it."""

    occupants: tuple
    sampling_mode: str = STRATIFIED
    seed: int = 0
    sigma: float = 1.5

    def __post_init__(self):
        ids = [o.id for o in self.occupants]
        if ids != list(range(len(ids))):
            raise DomainError("occupant ids must be 0..n-1 in order")

    def __len__(self) -> int:
        return len(self.occupants)

    @property
    def dps(self) -> tuple:
        """Personal offsets in occupant order."""
        return tuple(o.dp for o in self.occupants)


@dataclass(frozen=True)
class ComfortBand:
    """The DI interval inside which an occupant counts as comfortable."""

    lower: float = 65.0
    upper: float = 70.0

    def __post_init__(self):
        if not self.lower < self.upper:
            raise DomainError(
                f"band lower bound {self.lower} must be below upper {self.upper}"
            )

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)


@dataclass(frozen=True)
class IhcsRange:
    """Correction steps a wearable device can apply, in whole DI units."""

    min_dn: int = -5
    max_dn: int = 5

    def __post_init__(self):
        if not self.min_dn <= 0 <= self.max_dn:
            raise DomainError(
                f"correction range [{self.min_dn}, {self.max_dn}] must contain 0"
            )

    def steps(self) -> range:
        """All usable integer steps, ascending (11 levels by default)."""
        return range(self.min_dn, self.max_dn + 1)


def _clamp_level(value: float) -> int:
    return max(DP_MIN, min(DP_MAX, round(value)))


def population_from_dps(dps, sampling_mode: str = STRATIFIED, seed: int = 0,
                        sigma: float = 1.5) -> Population:
    """Build a population directly from a sequence of offsets."""
    occupants = tuple(Occupant(i, int(dp)) for i, dp in enumerate(dps))
    return Population(occupants, sampling_mode, seed, sigma)


def sample_population(n: int, mode: str = STRATIFIED, seed: int = 0,
                      sigma: float = 1.5) -> Population:
    """Draw a population of n occupants with normal-distributed offsets.

    Stratified mode places occupant j at the (j+0.5)/n quantile of the
    N(0, sigma) distribution, rounded to the nearest level and clamped to
    [-3, +3]. The result is deterministic and independent of the seed, and
    covers the distribution evenly, which keeps sweep outputs smooth.

    Seeded-random mode draws each offset independently from the same
    clamped, rounded normal using a dedicated generator, so equal seeds
    reproduce equal populations.
    """
    if n < 1:
        raise DomainError(f"population size must be at least 1, got {n}")
    if sigma <= 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    if mode == STRATIFIED:
        dps = [
            _clamp_level(sigma * _STD_NORMAL.inv_cdf((j + 0.5) / n))
            for j in range(n)
        ]
    elif mode == SEEDED_RANDOM:
        rng = random.Random(seed)
        dps = [_clamp_level(sigma * rng.gauss(0.0, 1.0)) for _ in range(n)]
    else:
        raise DomainError(
            f"unknown sampling mode {mode!r}; expected "
            f"{STRATIFIED!r} or {SEEDED_RANDOM!r}"
        )
    return population_from_dps(dps, mode, seed, sigma)


def sdi(tdi: float, dp: float, dn: float) -> float:
    """Sensed discomfort index: room index plus personal and device offsets."""
    return tdi + dp + dn


def comfort_error(sdi_value: float, band: ComfortBand) -> float:
    """Distance from a sensed index to the comfort band; zero inside it."""
    if sdi_value < band.lower:
        return band.lower - sdi_value
    if sdi_value > band.upper:
        return sdi_value - band.upper
    return 0.0


def total_error(pop: Population, tdi: float, dn, band: ComfortBand) -> float:
    """Sum of comfort errors over all occupants for a given room index.

    `dn` must give one device correction per occupant, in occupant order.
    """
    if len(dn) != len(pop):
        raise DomainError(
            f"correction vector has {len(dn)} entries for {len(pop)} occupants"
        )
    return sum(
        comfort_error(sdi(tdi, occ.dp, d), band)
        for occ, d in zip(pop.occupants, dn)
    )
