"""Streaming first and second moments of (possibly complex) Monte Carlo samples."""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MomentAccumulator:
    """
    Count, mean and the sums of squared deviations from the mean of the real and imaginary
    parts. Batches are reduced in two passes and combined with Chan's pairwise update.
    """

    count: int = 0
    mean: complex = 0j
    deviations_real: float = 0.0
    deviations_imag: float = 0.0

    @staticmethod
    def of(samples) -> "MomentAccumulator":
        values = np.asarray(samples)
        if values.size == 0:
            return MomentAccumulator()
        real = np.real(values).astype(np.float64).ravel()
        imag = np.imag(values).astype(np.float64).ravel()
        mean_real, mean_imag = real.mean(), imag.mean()
        return MomentAccumulator(
            count=int(values.size),
            mean=complex(mean_real, mean_imag),
            deviations_real=float(np.sum((real - mean_real) ** 2)),
            deviations_imag=float(np.sum((imag - mean_imag) ** 2)),
        )

    def merge(self, other: "MomentAccumulator") -> "MomentAccumulator":
        if other.count == 0:
            return self
        if self.count == 0:
            return other
        count = self.count + other.count
        delta = other.mean - self.mean
        weight = self.count * other.count / count
        return MomentAccumulator(
            count=count,
            mean=self.mean + delta * (other.count / count),
            deviations_real=self.deviations_real
            + other.deviations_real
            + delta.real**2 * weight,
            deviations_imag=self.deviations_imag
            + other.deviations_imag
            + delta.imag**2 * weight,
        )

    def _component_error(self, deviations: float) -> float:
        if self.count < 2:
            return float("inf")
        return float(np.sqrt(deviations / (self.count - 1) / self.count))

    @property
    def stderr_real(self) -> float:
        return self._component_error(self.deviations_real)

    @property
    def stderr_imag(self) -> float:
        return self._component_error(self.deviations_imag)

    @property
    def stderr(self) -> float:
        """Standard error of the modulus, bounded by the root sum of the component errors."""
        return float(np.hypot(self.stderr_real, self.stderr_imag))


def merge_all(left: dict, right: dict) -> dict:
    """Merges two `{key: MomentAccumulator}` maps key by key."""
    return {key: left[key].merge(right[key]) for key in left}
