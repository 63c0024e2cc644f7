"""Monte Carlo estimators of `E[exp(i t Z_n)]`."""
import logging
from dataclasses import dataclass

import numpy as np

from . import SceneryModel
from .conditional import conditional_cf_batch
from ..errors import DomainError
from ..stable_laws.scenery import SceneryLaw
from ..utilities.parallel import ChunkPlan, map_chunks
from ..utilities.random import StreamPurpose, chunk_generator
from ..utilities.statistics import MomentAccumulator
from ..walk_paths import WalkModel
from ..walk_paths.normalization import path_batches

MIN_REPLICAS = 100


@dataclass(frozen=True)
class CFEstimate:
    t: float
    moments: MomentAccumulator

    @property
    def value(self) -> complex:
        return self.moments.mean

    @property
    def stderr_real(self) -> float:
        return self.moments.stderr_real

    @property
    def stderr_imag(self) -> float:
        return self.moments.stderr_imag


def _check_replicas(operation: str, reps: int):
    if reps < MIN_REPLICAS:
        raise DomainError(operation, f"reps = {reps} is below {MIN_REPLICAS}")


def _conditional_chunk(
    chunk: int,
    start: int,
    stop: int,
    walk: WalkModel,
    law: SceneryLaw,
    n: int,
    t: float,
    seed: int,
) -> MomentAccumulator:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    total = MomentAccumulator()
    for batch in path_batches(walk, n, stop - start, rng):
        total = total.merge(MomentAccumulator.of(conditional_cf_batch(batch, law, t)))
    return total


def mc_char_fn(
    walk: WalkModel,
    law: SceneryLaw,
    n: int,
    t: float,
    reps: int,
    seed: int,
    number_of_threads: int = 1,
) -> CFEstimate:
    """Rao-Blackwellised estimate: the mean of `prod_y phi(t N_n(y))` over walk replicas."""
    _check_replicas("mc_char_fn", reps)
    moments = map_chunks(
        _conditional_chunk,
        ChunkPlan(reps),
        MomentAccumulator.merge,
        number_of_threads,
        walk=walk,
        law=law,
        n=n,
        t=t,
        seed=seed,
    )
    estimate = CFEstimate(t=t, moments=moments)
    logging.getLogger(__name__).debug(
        f"E[exp(i t Z_{n})] at t={t:g} from {reps} walks: {estimate.value:.6g}"
    )
    return estimate


def _naive_chunk(
    chunk: int,
    start: int,
    stop: int,
    walk: WalkModel,
    scenery: SceneryModel,
    n: int,
    t: float,
    seed: int,
) -> MomentAccumulator:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    total = MomentAccumulator()
    first = start
    for batch in path_batches(walk, n, stop - start, rng):
        rows, sites, counts = batch.site_runs
        xi = scenery.values(first + rows, sites)
        z = np.add.reduceat(xi * counts, batch.replica_run_starts)
        total = total.merge(MomentAccumulator.of(np.exp(1j * t * z)))
        first += batch.replicas
    return total


def naive_char_fn(
    walk: WalkModel,
    scenery: SceneryModel,
    n: int,
    t: float,
    reps: int,
    seed: int,
    number_of_threads: int = 1,
) -> CFEstimate:
    """Mean of `exp(i t Z_n)` with the scenery sampled, one scenery per replica."""
    _check_replicas("naive_char_fn", reps)
    moments = map_chunks(
        _naive_chunk,
        ChunkPlan(reps),
        MomentAccumulator.merge,
        number_of_threads,
        walk=walk,
        scenery=scenery,
        n=n,
        t=t,
        seed=seed,
    )
    return CFEstimate(t=t, moments=moments)
