"""
MCAR amputation with exponentially distributed gaps.

Starting from a = 0 the simulator repeats a <- ceil(a + E), E ~ Exp(rate), and
deletes position a (1-based) while a <= n. Because a is always an integer the
increments are i.i.d. ceil(E) ~ Geometric(1 - exp(-rate)), so the long-run
missing fraction is 1 - exp(-rate).

Random numbers come from numpy's PCG64 generator (64-bit state, SeedSequence
seeding), which yields identical streams on every platform for the same seed.
"""
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from app import logger
from app.errors import AlreadyMissingException, NegativeRateException, ValidationException
from app.services.series import TimeSeries
from app.utils.enums import MechanismLabel

_SEED_MASK = (1 << 64) - 1
_DRAW_BATCH = 4096


def make_generator(seed: int) -> np.random.Generator:
    """PCG64 generator; negative seeds are mapped onto their 64-bit two's complement."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed) & _SEED_MASK)))


@dataclass(frozen=True)
class AmputationResult:
    data: TimeSeries
    na_indices: Tuple[int, ...]
    rate: float
    seed: int
    mechanism: MechanismLabel = field(default=MechanismLabel.MCAR)

    @property
    def positions(self) -> np.ndarray:
        """0-based positions of the removed observations."""
        return np.asarray(self.na_indices, dtype=int) - 1

    @property
    def n_missing(self) -> int:
        return len(self.na_indices)


def exponential_gap_indices(n: int, rate: float, rng: np.random.Generator) -> np.ndarray:
    """
    1-based positions to delete from a series of length n. Only the length is
    visible here, so the selection cannot depend on the values (MCAR).
    """
    if rate == 0:
        return np.empty(0, dtype=int)

    positions = []
    a = 0
    while a <= n:
        uniforms = rng.random(_DRAW_BATCH)
        # U = 0 would give an infinite gap; 1 - U lies in (0, 1]
        gaps = np.ceil(-np.log1p(-uniforms) / rate)
        # a zero draw must still advance the index
        gaps = np.maximum(gaps, 1.0)
        steps = a + np.cumsum(gaps)
        positions.append(steps[steps <= n])
        a = steps[-1]
    return np.concatenate(positions).astype(int)


def create_missing(series: TimeSeries, rate: float, seed: int) -> AmputationResult:
    """
    Delete observations from a complete series at exponentially distributed gaps.

    :param series: complete series
    :param rate: lambda of the exponential gap law, >= 0; 0 is a pass-through
    :param seed: generator seed
    :return: AmputationResult with the amputated series and 1-based removed indices
    """
    if not series.is_complete:
        raise AlreadyMissingException(
            f"Amputation needs a complete series, found {series.n_missing} missing values."
        )
    if not np.isfinite(rate):
        raise ValidationException(f"Rate must be finite, got {rate}.")
    if rate < 0:
        raise NegativeRateException(f"Rate must be nonnegative, got {rate}.")

    indices = exponential_gap_indices(len(series), float(rate), make_generator(seed))

    values = series.values.copy()
    values[indices - 1] = np.nan
    logger.debug(f"Amputated {indices.size}/{len(series)} values (rate={rate}, seed={seed})")

    return AmputationResult(
        data=series.with_values(values),
        na_indices=tuple(int(i) for i in indices),
        rate=float(rate),
        seed=int(seed),
    )
