"""Scenery laws: exact stable laws and representatives of their normal domains of attraction."""
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np
from scipy.special import ndtri

from . import StableCFParams, cf_value, log_cf_value
from .sampling import LatticeZipf, stable_from_uniforms
from ..errors import DomainError

MIN_CHECK_SAMPLES = 10**4


class SceneryKind(Enum):
    EXACT_STABLE = "stable"
    RADEMACHER = "rademacher"
    GAUSSIAN = "gaussian"
    LATTICE_ZIPF = "zipf"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SceneryLaw:
    kind: SceneryKind
    stable: Optional[StableCFParams] = None
    variance: float = 1.0
    zipf: Optional[LatticeZipf] = None

    @staticmethod
    def exact_stable(params: StableCFParams) -> "SceneryLaw":
        return SceneryLaw(SceneryKind.EXACT_STABLE, stable=params)

    @staticmethod
    def rademacher() -> "SceneryLaw":
        return SceneryLaw(SceneryKind.RADEMACHER)

    @staticmethod
    def gaussian(variance: float = 1.0) -> "SceneryLaw":
        if variance <= 0:
            raise DomainError(
                "SceneryLaw.gaussian", f"variance {variance} must be positive"
            )
        return SceneryLaw(SceneryKind.GAUSSIAN, variance=variance)

    @staticmethod
    def lattice_zipf(tail_exponent: float) -> "SceneryLaw":
        if tail_exponent <= 1:
            raise DomainError(
                "SceneryLaw.lattice_zipf",
                f"tail exponent {tail_exponent} must exceed 1",
            )
        return SceneryLaw(SceneryKind.LATTICE_ZIPF, zipf=LatticeZipf(tail_exponent))

    @property
    def lattice(self) -> bool:
        return self.kind in (SceneryKind.RADEMACHER, SceneryKind.LATTICE_ZIPF)

    @property
    def symmetric(self) -> bool:
        if self.kind != SceneryKind.EXACT_STABLE:
            return True
        return self.stable.a2 == 0  # type: ignore

    @property
    def limit_params(self) -> StableCFParams:
        """The stable law `(beta, a1, a2)` this law is attracted to (itself when exact)."""
        if self.kind == SceneryKind.EXACT_STABLE:
            return self.stable  # type: ignore
        if self.kind == SceneryKind.RADEMACHER:
            return StableCFParams(beta=2.0, a1=0.5)
        if self.kind == SceneryKind.GAUSSIAN:
            return StableCFParams(beta=2.0, a1=self.variance / 2)
        return self.zipf.limit_params()  # type: ignore

    def negated(self) -> "SceneryLaw":
        """Law of `-xi`."""
        if self.kind == SceneryKind.EXACT_STABLE:
            return replace(self, stable=self.stable.mirrored())  # type: ignore
        return self

    def cf(self, u):
        """Closed-form characteristic function, vectorised over `u`."""
        u = np.asarray(u, dtype=np.float64)
        if self.kind == SceneryKind.EXACT_STABLE:
            value = cf_value(self.stable, u)  # type: ignore
        elif self.kind == SceneryKind.RADEMACHER:
            value = np.cos(u) + 0j
        elif self.kind == SceneryKind.GAUSSIAN:
            value = np.exp(-self.variance * u * u / 2) + 0j
        else:
            value = self.zipf.cf(u).reshape(u.shape) + 0j  # type: ignore
        return complex(value) if np.ndim(value) == 0 else value

    @property
    def has_log_cf(self) -> bool:
        """True when the characteristic function never vanishes and has a closed-form log."""
        return self.kind in (SceneryKind.EXACT_STABLE, SceneryKind.GAUSSIAN)

    def log_cf(self, u):
        if self.kind == SceneryKind.EXACT_STABLE:
            return log_cf_value(self.stable, u)  # type: ignore
        if self.kind == SceneryKind.GAUSSIAN:
            u = np.asarray(u, dtype=np.float64)
            return -self.variance * u * u / 2 + 0j
        raise DomainError("SceneryLaw.log_cf", f"{self.kind} has no closed-form log CF")

    def from_uniforms(self, first, second):
        """Maps two independent uniforms on (0, 1) to scenery values."""
        if self.kind == SceneryKind.EXACT_STABLE:
            return stable_from_uniforms(self.stable, first, second)  # type: ignore
        if self.kind == SceneryKind.RADEMACHER:
            return np.where(np.asarray(first) < 0.5, -1.0, 1.0)
        if self.kind == SceneryKind.GAUSSIAN:
            return np.sqrt(self.variance) * ndtri(first)
        return self.zipf.from_uniforms(first, second).astype(np.float64)  # type: ignore


def empirical_cf(
    law: SceneryLaw, u_grid, sample_count: int, rng: np.random.Generator
) -> np.ndarray:
    """Mean of `exp(i u xi)` over `sample_count` draws, for every `u` of the grid."""
    if sample_count < MIN_CHECK_SAMPLES:
        raise DomainError(
            "empirical_cf", f"sample_count {sample_count} is below {MIN_CHECK_SAMPLES}"
        )
    uniforms = rng.random((2, sample_count))
    uniforms = np.where(uniforms == 0.0, 2.0**-54, uniforms)
    samples = law.from_uniforms(uniforms[0], uniforms[1])
    grid = np.asarray(u_grid, dtype=np.float64)
    return np.array([np.mean(np.exp(1j * u * samples)) for u in grid])


def empirical_cf_check(
    law: SceneryLaw, u_grid, sample_count: int, rng: np.random.Generator
) -> float:
    """Max over `u_grid` of |empirical CF - closed-form CF| from `sample_count` draws."""
    grid = np.asarray(u_grid, dtype=np.float64)
    deviations = np.abs(empirical_cf(law, grid, sample_count, rng) - law.cf(grid))
    return float(np.max(np.where(grid == 0, 0.0, deviations)))
