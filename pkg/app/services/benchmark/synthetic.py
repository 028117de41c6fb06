from dataclasses import dataclass, replace
from typing import Dict

import numpy as np

from app.errors import FrequencyTooLowException, ValidationException
from app.services.missing import make_generator
from app.services.series import TimeSeries, make_series
from app.utils.enums import SyntheticKind

BASE_LEVEL = 100.0
TREND_SLOPE = 0.5
SEASONAL_AMPLITUDE = 10.0


@dataclass(frozen=True)
class SyntheticSpec:
    kind: SyntheticKind
    n: int
    frequency: int = 1
    noise_sigma: float = 0.0
    seed: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", SyntheticKind(self.kind))
        if self.n < 1:
            raise ValidationException(f"Synthetic series length must be positive, got {self.n}.")
        if self.frequency < 1:
            raise ValidationException(f"Frequency must be a positive integer, got {self.frequency}.")
        if self.kind.has_seasonality and self.frequency < 2:
            raise FrequencyTooLowException(f"A {self.kind.value} series needs frequency >= 2.")
        if not np.isfinite(self.noise_sigma) or self.noise_sigma < 0:
            raise ValidationException(f"Noise sigma must be a nonnegative real, got {self.noise_sigma}.")

    def with_seed(self, seed: int) -> "SyntheticSpec":
        return replace(self, seed=seed)


# Analogs of the four benchmark series: trend and seasonality, seasonality only,
# trend only, neither.
ARCHETYPES: Dict[str, SyntheticSpec] = {
    "airpass": SyntheticSpec(SyntheticKind.TREND_SEASONAL, n=144, frequency=12, noise_sigma=1.0),
    "beersales": SyntheticSpec(SyntheticKind.SEASONAL, n=192, frequency=12, noise_sigma=1.0),
    "sp": SyntheticSpec(SyntheticKind.TREND, n=168, frequency=1, noise_sigma=1.0),
    "google": SyntheticSpec(SyntheticKind.NONE, n=521, frequency=1, noise_sigma=1.0),
}


def generate_synthetic(spec: SyntheticSpec) -> TimeSeries:
    """
    value[t] = 100 + 0.5 t [trend] + 10 sin(2 pi t / f) [seasonal] + N(0, sigma), t = 1..n.
    """
    t = np.arange(1, spec.n + 1, dtype=float)
    values = np.full(spec.n, BASE_LEVEL)
    if spec.kind.has_trend:
        values += TREND_SLOPE * t
    if spec.kind.has_seasonality:
        values += SEASONAL_AMPLITUDE * np.sin(2.0 * np.pi * t / spec.frequency)
    if spec.noise_sigma > 0:
        values += make_generator(spec.seed).normal(0.0, spec.noise_sigma, spec.n)
    return make_series(values, frequency=spec.frequency)


def archetype_datasets(seed: int = 1) -> Dict[str, TimeSeries]:
    return {name: generate_synthetic(spec.with_seed(seed)) for name, spec in ARCHETYPES.items()}
