"""Paired Monte Carlo estimators of the renewal kernels along simulated paths."""
import logging
import math
from typing import Optional, Sequence

from scipy.special import gamma

from . import KernelEstimate, TestFunction
from ..core import SceneryModel
from ..core.conditional import z_prefix
from ..errors import DomainError, RegimeMismatch
from ..regimes import Regime, classify, delta_exponent
from ..stable_laws.scenery import SceneryKind, SceneryLaw
from ..utilities.parallel import ChunkPlan, map_chunks
from ..utilities.random import StreamPurpose, chunk_generator
from ..utilities.statistics import MomentAccumulator, merge_all
from ..walk_paths import WalkModel
from ..walk_paths.normalization import path_batches

MIN_KERNEL_REPLICAS = 1000
FULL = "full"
HALF = "half"
ENVELOPE = "envelope"


def regime_of(walk: WalkModel, law: SceneryLaw) -> Optional[Regime]:
    try:
        return classify(walk.alpha, law.limit_params.beta)
    except RegimeMismatch:
        return None


def check_domain(operation: str, h: TestFunction, law: SceneryLaw, a_grid: Sequence):
    if h.lattice != law.lattice:
        raise DomainError(
            operation,
            f"{h.name} is a {h.domain} function but the scenery is "
            f"{'lattice' if law.lattice else 'continuous'}",
        )
    if h.lattice and any(a != round(a) for a in a_grid):
        raise DomainError(operation, "lattice shifts must be integers")


def _check_replicas(operation: str, reps: int):
    if reps < MIN_KERNEL_REPLICAS:
        raise DomainError(operation, f"reps = {reps} is below {MIN_KERNEL_REPLICAS}")


def _direct_chunk(
    chunk: int,
    start: int,
    stop: int,
    walk: WalkModel,
    scenery: SceneryModel,
    h: TestFunction,
    n: int,
    a_grid: Sequence[float],
    seed: int,
) -> dict:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    half = max(n // 2, 1)
    totals = {
        (a, part): MomentAccumulator() for a in a_grid for part in (FULL, HALF)
    }
    first = start
    for batch in path_batches(walk, n, stop - start, rng):
        z = z_prefix(batch, scenery, first)
        at_origin = h.h(z)
        for a in a_grid:
            paired = at_origin - h.h(z - a)
            totals[(a, FULL)] = totals[(a, FULL)].merge(
                MomentAccumulator.of(paired.sum(axis=1))
            )
            totals[(a, HALF)] = totals[(a, HALF)].merge(
                MomentAccumulator.of(paired[:, :half].sum(axis=1))
            )
        first += batch.replicas
    return totals


def k_na_direct_grid(
    walk: WalkModel,
    scenery: SceneryModel,
    h: TestFunction,
    n: int,
    a_grid: Sequence[float],
    reps: int,
    seed: int,
    number_of_threads: int = 1,
) -> list[KernelEstimate]:
    """`K_{n,a}(h)` for every shift of `a_grid`, all from the same paths and sceneries."""
    _check_replicas("k_na_direct", reps)
    if n < 1:
        raise DomainError("k_na_direct", f"n = {n} must be at least 1")
    grid = [float(a) for a in a_grid]
    check_domain("k_na_direct", h, scenery.law, grid)
    moments = map_chunks(
        _direct_chunk,
        ChunkPlan(reps),
        merge_all,
        number_of_threads,
        walk=walk,
        scenery=scenery,
        h=h,
        n=n,
        a_grid=grid,
        seed=seed,
    )
    regime = regime_of(walk, scenery.law)
    estimates = [
        KernelEstimate(
            value=moments[(a, FULL)].mean,
            stat_error=moments[(a, FULL)].stderr,
            trunc_error=0.0,
            a=a,
            n=n,
            regime=regime,
            doubling_change=abs(moments[(a, FULL)].mean - moments[(a, HALF)].mean),
        )
        for a in grid
    ]
    logging.getLogger(__name__).info(
        f"direct K_(n={n}) of {h.name} on {len(grid)} shifts from {reps} paths"
    )
    return estimates


def k_na_direct(
    walk: WalkModel,
    scenery: SceneryModel,
    h: TestFunction,
    n: int,
    a: float,
    reps: int,
    seed: int,
    number_of_threads: int = 1,
) -> KernelEstimate:
    """Mean over replicas of `sum_{k <= n} (h(Z_k) - h(Z_k - a))` along one path each."""
    return k_na_direct_grid(
        walk, scenery, h, n, [a], reps, seed, number_of_threads=number_of_threads
    )[0]


def _transient_chunk(
    chunk: int,
    start: int,
    stop: int,
    walk: WalkModel,
    scenery: SceneryModel,
    h: TestFunction,
    n_max: int,
    a_grid: Sequence[float],
    seed: int,
) -> dict:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    beta = scenery.law.limit_params.beta
    totals = {key: MomentAccumulator() for key in [*a_grid, ENVELOPE]}
    first = start
    for batch in path_batches(walk, n_max, stop - start, rng):
        z = z_prefix(batch, scenery, first)
        for a in a_grid:
            totals[a] = totals[a].merge(MomentAccumulator.of(h.h(z - a).sum(axis=1)))
        envelope = batch.v_final(beta) ** (-1 / beta)
        totals[ENVELOPE] = totals[ENVELOPE].merge(MomentAccumulator.of(envelope))
        first += batch.replicas
    return totals


def transient_tail(
    h: TestFunction, scenery: SceneryModel, alpha: float, n_max: int, envelope: float
) -> float:
    """
    `sum_{n > n_max} (I[h] / pi) Gamma(1 + 1/beta) (a1 scale^beta)^(-1/beta) E[V_n^(-1/beta)]`
    with `E[V_n^(-1/beta)]` continued past `n_max` as `envelope (n / n_max)^(-delta)`.
    """
    params = scenery.law.limit_params
    beta = params.beta
    delta = delta_exponent(alpha, beta)
    rate = params.a1 * scenery.scale**beta
    per_term = abs(h.integral) / math.pi * gamma(1 + 1 / beta) * rate ** (-1 / beta)
    return float(per_term * envelope * n_max / (delta - 1))


def k_transient_sum_grid(
    walk: WalkModel,
    scenery: SceneryModel,
    h: TestFunction,
    a_grid: Sequence[float],
    n_max: int,
    reps: int,
    seed: int,
    number_of_threads: int = 1,
) -> list[KernelEstimate]:
    """`sum_{n <= n_max} E[h(Z_n - a)]` for every shift, with the tail past `n_max`."""
    beta = scenery.law.limit_params.beta
    if beta >= 1:
        raise RegimeMismatch(
            walk.alpha, beta, "recurrent regime: the series diverges for beta >= 1"
        )
    regime = classify(walk.alpha, beta)
    if scenery.law.kind != SceneryKind.EXACT_STABLE:
        raise DomainError("k_transient_sum", "the scenery must be exactly stable")
    if not h.in_h1:
        raise DomainError("k_transient_sum", f"{h.name} is not in H1")
    if n_max < 1:
        raise DomainError("k_transient_sum", f"n_max = {n_max} must be at least 1")
    _check_replicas("k_transient_sum", reps)
    grid = [float(a) for a in a_grid]
    moments = map_chunks(
        _transient_chunk,
        ChunkPlan(reps),
        merge_all,
        number_of_threads,
        walk=walk,
        scenery=scenery,
        h=h,
        n_max=n_max,
        a_grid=grid,
        seed=seed,
    )
    tail = transient_tail(h, scenery, walk.alpha, n_max, moments[ENVELOPE].mean.real)
    logging.getLogger(__name__).info(
        f"transient sum of {h.name} up to n={n_max}: tail estimate {tail:.3g}"
    )
    return [
        KernelEstimate(
            value=moments[a].mean,
            stat_error=moments[a].stderr,
            trunc_error=tail,
            a=a,
            n=n_max,
            regime=regime,
        )
        for a in grid
    ]


def k_transient_sum(
    walk: WalkModel,
    scenery: SceneryModel,
    h: TestFunction,
    a: float,
    n_max: int,
    reps: int,
    seed: int,
    number_of_threads: int = 1,
) -> KernelEstimate:
    return k_transient_sum_grid(
        walk, scenery, h, [a], n_max, reps, seed, number_of_threads=number_of_threads
    )[0]

