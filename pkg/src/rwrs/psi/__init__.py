"""
## The series psi

    psi(t) = sum_{n >= 1} E[exp(-|t|^beta V_n (a1 + i a2 sgn t))]

is the sum of the characteristic functions of `Z_n` for an exactly stable scenery. Since
`V_n >= n^min(1, beta)`, the tail after `n_max` terms is bounded by
`sum_{n > n_max} exp(-a1 |t|^beta n^min(1, beta))`; `choose_n_max` picks the truncation from that
bound and `psi_mc` refuses truncations it cannot certify.

Near `t = 0` the series behaves like `gamma_asym(t)`:

* `beta = 1`: `1 / (a1 |t|)`,
* `alpha > 1`: `C |t|^(-1/delta) (a1 + i a2 sgn t)^(-1/(delta beta))`,
* `alpha = 1`: `(-log |t|^beta)^(1 - beta) / (c |t|^beta (a1 + i a2 sgn t))`.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.special import gamma, gammaincc

from ..core.conditional import prefix_cf
from ..errors import DomainError, RegimeMismatch, TruncationError
from ..regimes import Regime, classify, delta_exponent
from ..stable_laws import StableCFParams
from ..stable_laws.scenery import SceneryLaw
from ..utilities.parallel import ChunkPlan, map_chunks
from ..utilities.random import StreamPurpose, chunk_generator
from ..utilities.statistics import MomentAccumulator, merge_all
from ..walk_paths import WalkModel
from ..walk_paths.normalization import path_batches

N_MAX_CAP = 10**7
CONTRAST = "contrast"


@dataclass(frozen=True)
class PsiRegime:
    alpha: float
    params: StableCFParams
    c_const: Optional[float] = None
    big_c: Optional[float] = None

    def __post_init__(self):
        classify(self.alpha, self.beta)
        if self.beta == 1:
            return
        if self.alpha == 1 and not (self.c_const or 0) > 0:
            raise RegimeMismatch(self.alpha, self.beta, "alpha = 1 needs c > 0")
        if self.alpha > 1 and not (self.big_c or 0) > 0:
            raise RegimeMismatch(self.alpha, self.beta, "alpha > 1 needs C > 0")

    @property
    def beta(self) -> float:
        return self.params.beta

    @property
    def delta(self) -> float:
        return delta_exponent(self.alpha, self.beta)

    @property
    def regime(self) -> Regime:
        return classify(self.alpha, self.beta)


def psi_closed_beta1(a1: float, t: float) -> float:
    """`1 / (e^(a1 |t|) - 1)`, the value of psi when `V_n = n`."""
    if t == 0:
        raise DomainError("psi_closed_beta1", "t = 0 is a pole")
    if a1 <= 0:
        raise DomainError("psi_closed_beta1", f"a1 = {a1} must be positive")
    return 1 / math.expm1(a1 * abs(t))


def tail_bound(params: StableCFParams, t: float, n_max: int) -> float:
    """`sum_{n > n_max} exp(-a1 |t|^beta n^min(1, beta))`."""
    rate = params.a1 * abs(t) ** params.beta
    if params.beta >= 1:
        return math.exp(-rate * (n_max + 1)) / -math.expm1(-rate)
    # the summand decreases in n, so the sum is below the integral from n_max
    inverse = 1 / params.beta
    upper = gammaincc(inverse, rate * n_max**params.beta) * gamma(inverse)
    return float(inverse * rate ** (-inverse) * upper)


def choose_n_max(params: StableCFParams, t: float, tolerance: float) -> int:
    """Smallest `n_max` (up to doubling then bisection) whose tail bound is below `tolerance`."""
    if t == 0:
        raise DomainError("choose_n_max", "t = 0 is a pole")
    high = 1
    while tail_bound(params, t, high) >= tolerance:
        high *= 2
        if high > N_MAX_CAP:
            raise TruncationError(high, tail_bound(params, t, high), tolerance)
    low = high // 2
    while high - low > 1:
        middle = (low + high) // 2
        if tail_bound(params, t, middle) < tolerance:
            high = middle
        else:
            low = middle
    return high


@dataclass(frozen=True)
class PsiEstimate:
    t: float
    moments: MomentAccumulator
    truncation_bound: float
    n_max: int

    @property
    def value(self) -> complex:
        return self.moments.mean

    @property
    def stderr(self) -> float:
        return self.moments.stderr


def _psi_terms_chunk(
    chunk: int,
    start: int,
    stop: int,
    walk: WalkModel,
    params: StableCFParams,
    scenery: Optional[SceneryLaw],
    t_grid: Sequence[float],
    contrast: Optional[Sequence[float]],
    n_max: int,
    seed: int,
) -> dict:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    totals: dict = {t: MomentAccumulator() for t in t_grid}
    if contrast is not None:
        totals[CONTRAST] = MomentAccumulator()
    for batch in path_batches(walk, n_max, stop - start, rng):
        v = batch.v_prefix(params.beta) if scenery is None else None
        sums = []
        for t in t_grid:
            if v is not None:
                rate = abs(t) ** params.beta * params.rate(t)
                sums.append(np.exp(-rate * v).sum(axis=1))
            else:
                sums.append(prefix_cf(batch, scenery, t).sum(axis=1))
        for t, values in zip(t_grid, sums):
            totals[t] = totals[t].merge(MomentAccumulator.of(values))
        if contrast is not None:
            combined = sum(weight * values for weight, values in zip(contrast, sums))
            totals[CONTRAST] = totals[CONTRAST].merge(MomentAccumulator.of(combined))
    return totals


def _psi_sums(
    walk: WalkModel,
    params: StableCFParams,
    t_grid: Sequence[float],
    reps: int,
    n_max: int,
    seed: int,
    number_of_threads: int,
    scenery: Optional[SceneryLaw] = None,
    contrast: Optional[Sequence[float]] = None,
) -> dict:
    return map_chunks(
        _psi_terms_chunk,
        ChunkPlan(reps),
        merge_all,
        number_of_threads,
        walk=walk,
        params=params,
        scenery=scenery,
        t_grid=list(t_grid),
        contrast=contrast,
        n_max=n_max,
        seed=seed,
    )


def _certified(params: StableCFParams, t: float, n_max: int, tolerance: float) -> float:
    if t == 0:
        raise DomainError("psi_mc", "t = 0 is a pole")
    bound = tail_bound(params, t, n_max)
    if bound > tolerance:
        raise TruncationError(n_max, bound, tolerance)
    return bound


def psi_mc_grid(
    regime: PsiRegime,
    walk: WalkModel,
    t_grid: Sequence[float],
    reps: int,
    n_max: int,
    seed: int,
    tolerance: float = 1e-6,
    number_of_threads: int = 1,
) -> list[PsiEstimate]:
    """`psi_mc` on several `t` at once; all nodes share the same walks."""
    if walk.alpha != regime.alpha:
        raise RegimeMismatch(walk.alpha, regime.beta, f"walk index vs {regime.alpha}")
    bounds = [_certified(regime.params, t, n_max, tolerance) for t in t_grid]
    sums = _psi_sums(walk, regime.params, t_grid, reps, n_max, seed, number_of_threads)
    logging.getLogger(__name__).debug(
        f"psi on {len(t_grid)} nodes from {reps} paths of length {n_max}"
    )
    return [
        PsiEstimate(t=t, moments=sums[t], truncation_bound=bound, n_max=n_max)
        for t, bound in zip(t_grid, bounds)
    ]


def psi_mc(
    regime: PsiRegime,
    walk: WalkModel,
    t: float,
    reps: int,
    n_max: int,
    seed: int,
    tolerance: float = 1e-6,
    number_of_threads: int = 1,
) -> PsiEstimate:
    """
    Mean over walks of `sum_{n <= n_max} exp(-|t|^beta V_n (a1 + i a2 sgn t))`, with `V_n`
    accumulated along one path per replica.
    """
    return psi_mc_grid(
        regime, walk, [t], reps, n_max, seed, tolerance, number_of_threads
    )[0]


def gamma_asym(regime: PsiRegime, t: float) -> complex:
    if t == 0:
        raise DomainError("gamma_asym", "t = 0 is a pole")
    params = regime.params
    size = abs(t)
    if regime.beta == 1:
        return complex(1 / (params.a1 * size))
    rate = params.rate(t)
    if regime.alpha > 1:
        delta = regime.delta
        exponent = -1 / (delta * regime.beta)
        return regime.big_c * size ** (-1 / delta) * rate**exponent  # type: ignore
    if size >= 1:
        raise DomainError("gamma_asym", f"|t| = {size} must be below 1 when alpha = 1")
    log_term = (-math.log(size**regime.beta)) ** (1 - regime.beta)
    return log_term / (regime.c_const * size**regime.beta * rate)  # type: ignore


def gamma_asym_derivative(regime: PsiRegime, t: float) -> complex:
    """`d gamma / dt`: `-gamma / (delta t)` for `alpha > 1` (and `beta = 1`)."""
    value = gamma_asym(regime, t)
    if regime.alpha > 1 or regime.beta == 1:
        return -value / (regime.delta * t)
    log_term = -regime.beta * math.log(abs(t))
    return -regime.beta * value / t * (1 + (1 - regime.beta) / log_term)


@dataclass(frozen=True)
class RatioRow:
    t: float
    psi: PsiEstimate
    gamma: complex

    @property
    def ratio(self) -> complex:
        return self.psi.value / self.gamma

    @property
    def error(self) -> float:
        """Statistical plus truncation error, relative to `|gamma|`."""
        return (self.psi.stderr + self.psi.truncation_bound) / abs(self.gamma)


def psi_ratio_diagnostic(
    regime: PsiRegime,
    walk: WalkModel,
    t_grid: Sequence[float],
    reps: int,
    seed: int,
    relative_tolerance: float = 1e-4,
    number_of_threads: int = 1,
) -> list[RatioRow]:
    """
    `psi_hat(t) / gamma(t)` on a grid inside `0 < |t| <= 0.5`. The truncation of each node is
    certified to `relative_tolerance |gamma(t)|`; all nodes share one `n_max` and one set of
    walks.
    """
    if not t_grid or any(not 0 < abs(t) <= 0.5 for t in t_grid):
        raise DomainError("psi_ratio_diagnostic", "t grid must lie in 0 < |t| <= 0.5")
    gammas = [gamma_asym(regime, t) for t in t_grid]
    tolerance = relative_tolerance * min(abs(value) for value in gammas)
    n_max = max(choose_n_max(regime.params, t, tolerance) for t in t_grid)
    estimates = psi_mc_grid(
        regime, walk, t_grid, reps, n_max, seed, tolerance, number_of_threads
    )
    rows = [
        RatioRow(t=t, psi=estimate, gamma=value)
        for t, estimate, value in zip(t_grid, estimates, gammas)
    ]
    for row in rows:
        logging.getLogger(__name__).info(
            f"t={row.t:g}: psi/gamma = {row.ratio.real:.5f}{row.ratio.imag:+.5f}i "
            f"+- {row.error:.2g}"
        )
    return rows


@dataclass(frozen=True)
class DerivativeEstimate:
    t: float
    step: float
    moments: MomentAccumulator
    truncation_bound: float

    @property
    def value(self) -> complex:
        return self.moments.mean

    @property
    def stderr(self) -> float:
        return self.moments.stderr


def psi_derivative_mc(
    regime: PsiRegime,
    walk: WalkModel,
    t: float,
    step: float,
    reps: int,
    seed: int,
    relative_tolerance: float = 1e-4,
    number_of_threads: int = 1,
) -> DerivativeEstimate:
    """Central difference `(psi(t + h) - psi(t - h)) / 2h` on common walks."""
    if not 0 < step < abs(t):
        raise DomainError("psi_derivative_mc", f"step {step} must lie in (0, |t|)")
    nodes = [t - step, t + step]
    tolerance = relative_tolerance * abs(gamma_asym(regime, t)) * step
    n_max = max(choose_n_max(regime.params, node, tolerance) for node in nodes)
    contrast = [-1 / (2 * step), 1 / (2 * step)]
    sums = _psi_sums(
        walk, regime.params, nodes, reps, n_max, seed, number_of_threads, None, contrast
    )
    bound = sum(tail_bound(regime.params, node, n_max) for node in nodes) / (2 * step)
    return DerivativeEstimate(
        t=t, step=step, moments=sums[CONTRAST], truncation_bound=bound
    )


def psi_derivative_bound(params: StableCFParams, r: float) -> float:
    """
    `sum_n beta r^(beta-1) (a1 + |a2|) n exp(-a1 (r n)^beta)`: bounds `|psi'(t)|` on
    `|t| >= r` when `beta < 1`.
    """
    if params.beta >= 1:
        raise DomainError("psi_derivative_bound", "the envelope needs beta < 1")
    if r <= 0:
        raise DomainError("psi_derivative_bound", f"r = {r} must be positive")
    factor = params.beta * r ** (params.beta - 1) * (params.a1 + abs(params.a2))
    # terms are negligible once a1 (r n)^beta exceeds 50 plus the log of the prefactor n
    total = 0.0
    start = 1
    while True:
        n = np.arange(start, start + (1 << 20), dtype=np.float64)
        exponent = params.a1 * (r * n) ** params.beta
        total += float(np.sum(n * np.exp(-exponent)))
        if exponent[-1] > 50 + math.log(n[-1]):
            return factor * total
        start += 1 << 20


@dataclass(frozen=True)
class TildeGap:
    t: float
    psi_tilde: PsiEstimate
    psi: PsiEstimate
    gamma: complex

    @property
    def gap(self) -> float:
        return abs(self.psi_tilde.value - self.psi.value) / abs(self.gamma)


def psi_tilde_mc(
    walk: WalkModel,
    law: SceneryLaw,
    t: float,
    reps: int,
    n_max: int,
    seed: int,
    number_of_threads: int = 1,
) -> PsiEstimate:
    """
    `sum_{n <= n_max} E[exp(i t Z_n)]` through the conditional product. The truncation bound
    is certified only for laws with `|phi(u)| = exp(-a1 |u|^beta)`; it is `nan` otherwise.
    """
    if t == 0:
        raise DomainError("psi_tilde_mc", "t = 0 is a pole")
    params = law.limit_params
    bound = tail_bound(params, t, n_max) if law.has_log_cf else math.nan
    sums = _psi_sums(walk, params, [t], reps, n_max, seed, number_of_threads, law)
    return PsiEstimate(t=t, moments=sums[t], truncation_bound=bound, n_max=n_max)


def psi_tilde_gap(
    regime: PsiRegime,
    walk: WalkModel,
    law: SceneryLaw,
    t: float,
    reps: int,
    n_max: int,
    seed: int,
    number_of_threads: int = 1,
) -> TildeGap:
    """`|psi~(t) - psi(t)| / |gamma(t)|` with both series on the same walks."""
    if law.limit_params != regime.params:
        raise RegimeMismatch(
            regime.alpha, regime.beta, "scenery is not attracted to the regime's law"
        )
    tilde = psi_tilde_mc(walk, law, t, reps, n_max, seed, number_of_threads)
    sums = _psi_sums(walk, regime.params, [t], reps, n_max, seed, number_of_threads)
    plain = PsiEstimate(
        t=t,
        moments=sums[t],
        truncation_bound=tail_bound(regime.params, t, n_max),
        n_max=n_max,
    )
    return TildeGap(t=t, psi_tilde=tilde, psi=plain, gamma=gamma_asym(regime, t))
