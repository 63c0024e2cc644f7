"""Normalizations `b_n` and the Monte Carlo diagnostics built on them."""
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import WalkModel
from .simulation import PathBatch
from ..errors import DomainError, FitError
from ..regimes import delta_exponent
from ..utilities.parallel import ChunkPlan, map_chunks
from ..utilities.random import StreamPurpose, chunk_generator
from ..utilities.statistics import MomentAccumulator

BATCH_CELLS = 1 << 21
A0_T_GRID = tuple(np.linspace(0.1, 1.0, 10))
A0_BOOTSTRAP_RESAMPLES = 200


def b_norm(alpha: float, beta: float, n: int) -> float:
    """`n^delta` for `alpha > 1`, `n^(1/beta) log(n)^(1 - 1/beta)` for `alpha = 1`."""
    if alpha == 1:
        if n < 2:
            raise DomainError("b_norm", f"alpha = 1 needs n >= 2, got n = {n}")
        return n ** (1 / beta) * math.log(n) ** (1 - 1 / beta)
    return n ** delta_exponent(alpha, beta)


def path_batches(
    model: WalkModel, n: int, replicas: int, rng: np.random.Generator
) -> Iterator[PathBatch]:
    """Yields the replicas of one chunk in blocks of bounded size, in a fixed order."""
    rows = max(1, BATCH_CELLS // n)
    for start in range(0, replicas, rows):
        yield PathBatch.simulate(model, n, min(rows, replicas - start), rng)


def _normalized_v_chunk(
    chunk: int,
    start: int,
    stop: int,
    model: WalkModel,
    beta: float,
    n: int,
    norm: float,
    power: float,
    seed: int,
) -> MomentAccumulator:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    total = MomentAccumulator()
    for batch in path_batches(model, n, stop - start, rng):
        statistic = (norm / batch.v_final(beta) ** (1 / beta)) ** power
        total = total.merge(MomentAccumulator.of(statistic))
    return total


def normalized_v_sample(
    model: WalkModel,
    beta: float,
    n: int,
    reps: int,
    seed: int,
    power: float = -1.0,
    number_of_threads: int = 1,
) -> MomentAccumulator:
    """
    Moments of `(b_n / V_n^(1/beta))^power` over `reps` walks of length `n`. The default
    `power = -1` is the normalized functional `b_n^-1 V_n^(1/beta)` itself.
    """
    norm = b_norm(model.alpha, beta, n)
    result = map_chunks(
        _normalized_v_chunk,
        ChunkPlan(reps),
        MomentAccumulator.merge,
        number_of_threads,
        model=model,
        beta=beta,
        n=n,
        norm=norm,
        power=power,
        seed=seed,
    )
    logging.getLogger(__name__).info(
        f"(b_n/V_n^(1/{beta}))^{power:.4g} at n={n}: {result.mean.real:.6g} "
        f"+- {result.stderr_real:.2g}"
    )
    return result


@dataclass(frozen=True)
class A0Estimate:
    value: float
    stderr: float
    residual: float


def _endpoint_chunk(
    chunk: int, start: int, stop: int, model: WalkModel, n: int, seed: int
) -> np.ndarray:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    rows = max(1, BATCH_CELLS // n)
    endpoints = [
        model.sample_steps(rng, (min(rows, stop - block), n)).sum(axis=1)
        for block in range(start, stop, rows)
    ]
    return np.concatenate(endpoints)


def _a0_fit(scaled: np.ndarray, t_grid: np.ndarray) -> tuple[float, float]:
    modulus = np.abs(np.exp(1j * np.outer(t_grid, scaled)).mean(axis=1))
    decay = -np.log(modulus)
    slope = float(np.dot(t_grid, decay) / np.dot(t_grid, t_grid))
    if slope <= 0:
        return slope, math.inf
    relative = (decay - slope * t_grid) / (slope * t_grid)
    return slope, float(np.sqrt(np.mean(relative**2)))


def estimate_a0(
    model: WalkModel,
    n: int,
    reps: int,
    seed: int,
    t_grid: Optional[np.ndarray] = None,
    residual_threshold: float = 0.1,
    number_of_threads: int = 1,
) -> A0Estimate:
    """
    Fits `-log|E exp(i t S_n / n)| = a0 |t|` through the origin on `t_grid`. The standard
    error comes from a bootstrap over replicas. A relative residual above the threshold means
    the walk is not in the Cauchy domain and raises `FitError`.
    """
    grid = np.asarray(A0_T_GRID if t_grid is None else t_grid, dtype=np.float64)
    if n < 2:
        raise DomainError("estimate_a0", f"n = {n} must be at least 2")
    endpoints = map_chunks(
        _endpoint_chunk,
        ChunkPlan(reps),
        lambda left, right: np.concatenate([left, right]),
        number_of_threads,
        model=model,
        n=n,
        seed=seed,
    )
    scaled = endpoints.astype(np.float64) / n
    value, residual = _a0_fit(scaled, grid)
    if residual > residual_threshold:
        raise FitError(
            f"estimate_a0: relative fit residual {residual:.3g} exceeds "
            f"{residual_threshold}: the walk ({model.kind}) does not look Cauchy-like"
        )

    rng = chunk_generator(seed, StreamPurpose.BOOTSTRAP, 0)
    resampled = [
        _a0_fit(scaled[rng.integers(0, scaled.size, scaled.size)], grid)[0]
        for _ in range(A0_BOOTSTRAP_RESAMPLES)
    ]
    estimate = A0Estimate(
        value=value, stderr=float(np.std(resampled, ddof=1)), residual=residual
    )
    logging.getLogger(__name__).info(
        f"a0 = {estimate.value:.6g} +- {estimate.stderr:.2g}"
    )
    return estimate
