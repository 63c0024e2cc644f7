"""
Samplers for the stable laws and the lattice laws used as domain-of-attraction representatives.

All samplers are transforms of uniforms so the same code serves generator-driven draws
(`sample_stable`) and hash-derived sceneries (`rwrs.core.SceneryModel`).
"""
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.special import gamma, ndtri, zeta

from . import StableCFParams, to_cms_parameters
from ..constants import LATTICE_ZIPF_CUTOFF
from ..errors import InadmissibleParameters

TAIL_TABLE_SIZE = 1 << 16


def stable_from_uniforms(
    params: StableCFParams, angle_uniform: np.ndarray, exponential_uniform: np.ndarray
) -> np.ndarray:
    """
    Chambers-Mallows-Stuck transform. The result has characteristic function
    `exp(-|u|^beta (a1 + i a2 sgn u))` when both uniforms are independent on (0, 1).
    `beta = 2` is routed through the Gaussian quantile (variance `2 a1`).
    """
    cms = to_cms_parameters(params)
    if params.beta == 2:
        return math.sqrt(2 * params.a1) * ndtri(angle_uniform)

    angle = math.pi * (np.asarray(angle_uniform) - 0.5)
    if params.beta == 1:
        return cms.scale * np.tan(angle)

    alpha = cms.index
    exponential = -np.log(exponential_uniform)
    tilt = math.atan(cms.skew * math.tan(math.pi * alpha / 2)) / alpha
    stretch = (1 + (cms.skew * math.tan(math.pi * alpha / 2)) ** 2) ** (1 / (2 * alpha))
    shifted = alpha * (angle + tilt)
    core = np.sin(shifted) / np.cos(angle) ** (1 / alpha)
    tail = (np.cos(angle - shifted) / exponential) ** ((1 - alpha) / alpha)
    return cms.scale * stretch * core * tail


def sample_stable(params: StableCFParams, rng: np.random.Generator, size=None):
    """Draws variates of the stable law; identical generator state gives identical draws."""
    shape = (2,) if size is None else (2, *np.atleast_1d(size))
    uniforms = rng.random(shape)
    # Generator.random is in [0, 1); fold the zero onto the open interval
    uniforms = np.where(uniforms == 0.0, 2.0**-54, uniforms)
    draws = stable_from_uniforms(params, uniforms[0], uniforms[1])
    return float(draws) if size is None else draws


@dataclass(frozen=True)
class LatticeZipf:
    """
    Symmetric integer law with `P(X = +-k) = k^(-s) / (2 Z)` for `1 <= k <= K`,
    `K = 10**9` and `Z = zeta(s) - zeta(s, K + 1)`. X is never 0.
    """

    tail_exponent: float
    cutoff: int = LATTICE_ZIPF_CUTOFF

    @cached_property
    def normalization(self) -> float:
        head = zeta(self.tail_exponent, 1)
        return float(head - zeta(self.tail_exponent, self.cutoff + 1))

    def point_mass(self, k) -> np.ndarray:
        k = np.abs(np.asarray(k, dtype=np.float64))
        return np.where(
            (k >= 1) & (k <= self.cutoff),
            k ** (-self.tail_exponent) / (2 * self.normalization),
            0.0,
        )

    def tail(self, k) -> np.ndarray:
        """`P(|X| >= k)` for integers `k >= 1`."""
        k = np.asarray(k, dtype=np.float64)
        upper = zeta(self.tail_exponent, self.cutoff + 1)
        return (zeta(self.tail_exponent, k) - upper) / self.normalization

    @cached_property
    def _tail_table(self) -> np.ndarray:
        return -self.tail(np.arange(1, TAIL_TABLE_SIZE + 2))

    def magnitude_from_uniform(self, uniform: np.ndarray) -> np.ndarray:
        """
        Largest `k` with `P(|X| >= k) >= u`. Magnitudes up to `TAIL_TABLE_SIZE` come from a
        table lookup, the rare larger ones from a vectorised bisection on the Hurwitz zeta.
        """
        uniform = np.asarray(uniform, dtype=np.float64)
        table = self._tail_table
        magnitude = np.asarray(np.searchsorted(table, -uniform, side="right"))
        deep = magnitude > TAIL_TABLE_SIZE
        if np.any(deep):
            magnitude[deep] = self._bisect(uniform[deep], TAIL_TABLE_SIZE)
        return magnitude.astype(np.int64)

    def _bisect(self, uniform: np.ndarray, lowest: int) -> np.ndarray:
        low = np.full(uniform.shape, lowest, dtype=np.int64)
        high = np.full(uniform.shape, self.cutoff, dtype=np.int64)
        # invariant: tail(low) >= u > tail(high + 1)
        while np.any(low < high):
            middle = (low + high + 1) // 2
            above = self.tail(middle) >= uniform
            low = np.where(above, middle, low)
            high = np.where(above, high, middle - 1)
        return low

    def from_uniforms(self, magnitude_uniform, sign_uniform) -> np.ndarray:
        magnitude = self.magnitude_from_uniform(magnitude_uniform)
        return np.where(np.asarray(sign_uniform) < 0.5, -magnitude, magnitude)

    def cf(self, u, terms: int = 200_000) -> np.ndarray:
        """
        `sum_k cos(u k) k^(-s) / Z` summed over the first `terms` magnitudes; the omitted
        mass is below `terms^(1-s) / ((s-1) Z)`.
        """
        u = np.atleast_1d(np.asarray(u, dtype=np.float64))
        k = np.arange(1, terms + 1, dtype=np.float64)
        weights = k ** (-self.tail_exponent) / self.normalization
        return np.array([np.dot(np.cos(value * k), weights) for value in u])

    def limit_params(self) -> StableCFParams:
        """
        Parameters of the stable law whose normal domain of attraction contains this law:
        index `min(s - 1, 2)`; for `s < 3` the scale follows from the two-sided tail
        constant `c = 1 / ((s - 1) Z)` as `c Gamma(1 - b) cos(pi b / 2)` (`c pi / 2` at b = 1).
        """
        s = self.tail_exponent
        if s > 3:
            head = zeta(s - 2, 1) - zeta(s - 2, self.cutoff + 1)
            second_moment = head / self.normalization
            return StableCFParams(beta=2.0, a1=float(second_moment) / 2)
        if s == 3 or s <= 1:
            raise InadmissibleParameters(
                min(s - 1, 2.0),
                1.0,
                0.0,
                f"tail exponent {s} is outside a normal domain",
            )
        index = s - 1
        tail_constant = 1 / (index * self.normalization)
        if index == 1:
            return StableCFParams(beta=1.0, a1=tail_constant * math.pi / 2)
        scale = tail_constant * gamma(1 - index) * math.cos(math.pi * index / 2)
        return StableCFParams(beta=index, a1=float(scale))
