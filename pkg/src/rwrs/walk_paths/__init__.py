"""
## Walks and local times

A `WalkModel` is an integer valued, symmetric step law in the normal domain of attraction
of an `alpha`-stable law with `alpha` in [1, 2]. Walking `n` steps from `S_0 = 0` fills a
`LocalTimeTable`: the number of visits `N_n(y)` of every site among the times `1..n`
(the starting point is not a visit).
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from ..errors import DomainError
from ..stable_laws.sampling import LatticeZipf


class WalkKind(Enum):
    SIMPLE_SYMMETRIC = "simple"
    LAZY_SYMMETRIC = "lazy"
    LATTICE_ZIPF = "zipf"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class WalkModel:
    kind: WalkKind
    hold_probability: float = 0.0
    tail_exponent: Optional[float] = None

    def __post_init__(self):
        if self.kind == WalkKind.LAZY_SYMMETRIC and not 0 < self.hold_probability < 1:
            raise DomainError(
                "WalkModel",
                f"holding probability {self.hold_probability} not in (0, 1)",
            )
        if self.kind == WalkKind.LATTICE_ZIPF:
            exponent = self.tail_exponent
            if exponent is None or exponent < 2 or exponent == 3:
                raise DomainError(
                    "WalkModel",
                    f"tail exponent {exponent} does not give a stable index in [1, 2]",
                )

    @staticmethod
    def simple() -> "WalkModel":
        return WalkModel(WalkKind.SIMPLE_SYMMETRIC)

    @staticmethod
    def lazy(hold_probability: float) -> "WalkModel":
        return WalkModel(WalkKind.LAZY_SYMMETRIC, hold_probability=hold_probability)

    @staticmethod
    def lattice_zipf(tail_exponent: float) -> "WalkModel":
        return WalkModel(WalkKind.LATTICE_ZIPF, tail_exponent=tail_exponent)

    @property
    def alpha(self) -> float:
        if self.kind == WalkKind.LATTICE_ZIPF:
            return min(self.tail_exponent - 1, 2.0)  # type: ignore
        return 2.0

    @property
    def zipf(self) -> LatticeZipf:
        return LatticeZipf(self.tail_exponent)  # type: ignore

    @property
    def finite_support(self) -> Optional[list[tuple[int, float]]]:
        """`(step, probability)` pairs, or `None` for laws with infinite support."""
        if self.kind == WalkKind.SIMPLE_SYMMETRIC:
            return [(-1, 0.5), (1, 0.5)]
        if self.kind == WalkKind.LAZY_SYMMETRIC:
            move = (1 - self.hold_probability) / 2
            return [(-1, move), (0, self.hold_probability), (1, move)]
        return None

    def sample_steps(self, rng: np.random.Generator, shape) -> np.ndarray:
        if self.kind == WalkKind.LATTICE_ZIPF:
            uniforms = rng.random((2, *np.atleast_1d(shape)))
            uniforms = np.where(uniforms == 0.0, 2.0**-54, uniforms)
            return self.zipf.from_uniforms(uniforms[0], uniforms[1])
        uniform = rng.random(shape)
        if self.kind == WalkKind.SIMPLE_SYMMETRIC:
            return np.where(uniform < 0.5, -1, 1).astype(np.int64)
        upper = self.hold_probability + (1 - self.hold_probability) / 2
        steps = np.where(uniform < self.hold_probability, 0, 1)
        return np.where(uniform >= upper, -1, steps).astype(np.int64)


@dataclass
class LocalTimeTable:
    """
    Local times of one path. `counts` only holds visited sites; `running_v` keeps
    `V_n = sum_y N_n(y)^beta` up to date for every beta given at construction.
    """

    counts: dict[int, int] = field(default_factory=dict)
    n: int = 0
    position: int = 0
    running_v: dict[float, float] = field(default_factory=dict)

    @staticmethod
    def tracking(betas: Sequence[float]) -> "LocalTimeTable":
        return LocalTimeTable(running_v={beta: 0.0 for beta in betas})

    def visit(self, site: int) -> None:
        previous = self.counts.get(site, 0)
        self.counts[site] = previous + 1
        self.n += 1
        self.position = site
        for beta in self.running_v:
            self.running_v[beta] += (previous + 1) ** beta - previous**beta

    def step(self, increment: int) -> None:
        self.visit(self.position + int(increment))

    @property
    def range(self) -> int:
        return len(self.counts)

    @property
    def max_local_time(self) -> int:
        return max(self.counts.values(), default=0)


def v_beta(table: LocalTimeTable, beta: float) -> float:
    """`sum_y N_n(y)^beta`, recomputed from the counts."""
    if not 0 < beta <= 2:
        raise DomainError("v_beta", f"beta {beta} not in (0, 2]")
    return math.fsum(count**beta for count in table.counts.values())
