"""
## Random walk in random scenery

`Z_n = sum_{k <= n} xi_{S_k} = sum_y xi_y N_n(y)`. Scenery values are derived from
`(seed, replica, site)` by `SceneryModel`, so a replica's scenery is never stored and revisiting
a site returns the same value.

Given the walk, `E[exp(i t Z_n) | S] = prod_y phi(t N_n(y))`; averaging this conditional
product over walks (`conditional_cf`, `rwrs.core.estimators.mc_char_fn`) never samples the
scenery at all.
"""
from dataclasses import dataclass

import numpy as np

from .conditional import conditional_cf_batch
from ..constants import MAX_ENUMERATION_STEPS
from ..errors import DomainError
from ..stable_laws.scenery import SceneryLaw
from ..utilities.random import site_uniforms
from ..walk_paths import LocalTimeTable, WalkModel, v_beta
from ..walk_paths.simulation import PathBatch


@dataclass(frozen=True)
class SceneryModel:
    law: SceneryLaw
    seed: int
    scale: float = 1.0

    def values(self, replicas, sites) -> np.ndarray:
        """`xi_site` of scenery number `replica`; broadcasts like numpy."""
        first = site_uniforms(self.seed, replicas, sites, draw=0)
        second = site_uniforms(self.seed, replicas, sites, draw=1)
        values = self.law.from_uniforms(first, second)
        return self.scale * np.asarray(values, np.float64)

    def value(self, site: int, replica: int = 0) -> float:
        return float(self.values(replica, site)[0])

    def scaled(self, factor: float) -> "SceneryModel":
        return SceneryModel(self.law, self.seed, self.scale * factor)


@dataclass(frozen=True)
class RwrsSample:
    z: float
    table: LocalTimeTable
    v_beta: float


def sample_z(
    table: LocalTimeTable, scenery: SceneryModel, replica: int = 0
) -> RwrsSample:
    if table.n < 1 or not table.counts:
        raise DomainError("sample_z", "the local time table is empty")
    sites = np.fromiter(table.counts.keys(), dtype=np.int64)
    counts = np.fromiter(table.counts.values(), dtype=np.float64)
    z = float(np.dot(scenery.values(replica, sites), counts))
    beta = scenery.law.limit_params.beta
    return RwrsSample(z=z, table=table, v_beta=v_beta(table, beta))


def conditional_cf(table: LocalTimeTable, scenery_cf, t: float) -> complex:
    """`prod_y scenery_cf(t N_n(y))` over the occupied sites."""
    counts = np.fromiter(table.counts.values(), dtype=np.float64)
    return complex(np.prod(scenery_cf(t * counts)))


def enumerate_paths(walk: WalkModel, n: int) -> tuple[PathBatch, np.ndarray]:
    """Every step sequence of length `n` as a batch, with its probability."""
    support = walk.finite_support
    if support is None:
        raise DomainError("enumerate_paths", f"{walk.kind} walks have infinite support")
    if not 1 <= n <= MAX_ENUMERATION_STEPS:
        raise DomainError(
            "enumerate_paths", f"n = {n} outside [1, {MAX_ENUMERATION_STEPS}]"
        )
    steps = np.array([step for step, _ in support], dtype=np.int64)
    probabilities = np.array([probability for _, probability in support])
    choices = np.indices((len(support),) * n).reshape(n, -1).T
    return PathBatch.from_steps(steps[choices]), probabilities[choices].prod(axis=1)


def exact_cf_small(walk: WalkModel, law: SceneryLaw, n: int, t: float) -> complex:
    """`E[exp(i t Z_n)]` by enumerating all paths of a finitely supported walk."""
    batch, probabilities = enumerate_paths(walk, n)
    return complex(np.dot(probabilities, conditional_cf_batch(batch, law, t)))
