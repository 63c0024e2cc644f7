"""
`K_{n,a}(h)` from its Fourier representation. The partial sums `sum_{k <= n} E[e^(i t Z_k) | S]`
are evaluated per replica at the nodes of a graded Gauss-Legendre rule on `(0, T]`; the nodes
`-t` come from complex conjugation. With `q = 2 - 1/delta` the substitution `t = s^(1/q)`
flattens the `|t|^(1 - 1/delta)` behaviour of the integrand at the origin.

The quadrature error is estimated by a rule with half the panels evaluated on the same replicas;
for continuous functions the part of the line beyond `T` is bounded with the envelope
`|sum_k E[e^(i t Z_k)]| <= min(n, sum_k exp(-a1 |t|^beta k^min(1, beta)))`.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.integrate import quad

from . import KernelEstimate, TestFunction
from .direct import FULL, HALF, check_domain, regime_of
from ..core.conditional import prefix_cf
from ..core.estimators import MIN_REPLICAS
from ..errors import DomainError, QuadratureFailure
from ..psi import tail_bound
from ..regimes import delta_exponent
from ..stable_laws.scenery import SceneryLaw
from ..utilities.parallel import ChunkPlan, map_chunks
from ..utilities.random import StreamPurpose, chunk_generator
from ..utilities.statistics import MomentAccumulator, merge_all
from ..walk_paths import WalkModel
from ..walk_paths.normalization import path_batches

COARSE = "coarse"
GRADING_FLOOR = 0.25
ENVELOPE_DECAY = 40.0


@dataclass(frozen=True)
class QuadSpec:
    panels: int = 16
    order: int = 8
    cutoff: Optional[float] = None
    tolerance: float = 0.05

    def __post_init__(self):
        if self.panels < 2 or self.order < 2:
            raise DomainError("QuadSpec", "needs at least 2 panels of order 2")
        if self.cutoff is not None and self.cutoff <= 0:
            raise DomainError("QuadSpec", f"cutoff {self.cutoff} must be positive")


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray


def grading_exponent(alpha: float, beta: float) -> float:
    return min(1.0, max(2 - 1 / delta_exponent(alpha, beta), GRADING_FLOOR))


def graded_rule(
    upper: float, exponent: float, panels: int, order: int
) -> QuadratureRule:
    """Gauss-Legendre panels of equal width in `s = t^exponent` covering `(0, upper]`."""
    base_nodes, base_weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, upper**exponent, panels + 1)
    middle = ((edges[1:] + edges[:-1]) / 2)[:, None]
    half_width = ((edges[1:] - edges[:-1]) / 2)[:, None]
    s = (middle + half_width * base_nodes).ravel()
    t = s ** (1 / exponent)
    weights = (half_width * base_weights).ravel() * t / (exponent * s)
    return QuadratureRule(nodes=t, weights=weights)


def integration_limit(h: TestFunction, law: SceneryLaw, quad_spec: QuadSpec) -> float:
    if h.lattice:
        return math.pi
    if quad_spec.cutoff is not None:
        return quad_spec.cutoff
    params = law.limit_params
    envelope = (ENVELOPE_DECAY / params.a1) ** (1 / params.beta)
    return min(envelope, h.hat_cutoff or math.inf)


def cutoff_tail(h: TestFunction, law: SceneryLaw, n: int, upper: float) -> float:
    """Bound on the part of the integral with `|t| > upper`."""
    if h.lattice:
        return 0.0
    params = law.limit_params

    def envelope(t: float) -> float:
        return abs(complex(h.hat_h(t))) * min(n, tail_bound(params, t, 0))

    value, _ = quad(envelope, upper, np.inf, limit=200)
    return 2 * value / math.pi


def _shift_factors(t: float, a: float, even_form: bool) -> tuple[complex, complex]:
    if even_form:
        factor = 1 - math.cos(t * a)
        return factor, factor
    return 1 - np.exp(-1j * t * a), 1 - np.exp(1j * t * a)


def _fourier_chunk(
    chunk: int,
    start: int,
    stop: int,
    walk: WalkModel,
    law: SceneryLaw,
    h: TestFunction,
    n: int,
    a_grid: Sequence[float],
    rules: dict,
    even_form: bool,
    seed: int,
) -> dict:
    rng = chunk_generator(seed, StreamPurpose.WALK, chunk)
    half = max(n // 2, 1)
    keys = [(a, part) for a in a_grid for part in (FULL, HALF, COARSE)]
    totals = {key: MomentAccumulator() for key in keys}
    for batch in path_batches(walk, n, stop - start, rng):
        sums = {key: np.zeros(batch.replicas, dtype=np.complex128) for key in keys}
        for rule_name, rule in rules.items():
            for t, weight in zip(rule.nodes, rule.weights):
                prefix = prefix_cf(batch, law, t)
                partial = {rule_name: prefix.sum(axis=1)}
                if rule_name == FULL:
                    partial[HALF] = prefix[:, :half].sum(axis=1)
                forward = weight * complex(h.hat_h(t))
                backward = weight * complex(h.hat_h(-t))
                for a in a_grid:
                    plus, minus = _shift_factors(t, a, even_form)
                    for part, psi in partial.items():
                        sums[(a, part)] += forward * plus * psi
                        sums[(a, part)] += backward * minus * np.conj(psi)
        for key in keys:
            partial_moments = MomentAccumulator.of(sums[key] / (2 * np.pi))
            totals[key] = totals[key].merge(partial_moments)
    return totals


def k_na_fourier_grid(
    walk: WalkModel,
    law: SceneryLaw,
    h: TestFunction,
    n: int,
    a_grid: Sequence[float],
    reps: int,
    seed: int,
    quad_spec: QuadSpec = QuadSpec(),
    number_of_threads: int = 1,
) -> list[KernelEstimate]:
    """
    `1/(2 pi) int h^(t) (sum_{k <= n} E[e^(i t Z_k)]) (1 - e^(-i t a)) dt` for every shift.
    For `alpha = 1, beta = 2` the factor is `1 - cos(t a)`, which needs an even `h` and a
    symmetric scenery.
    """
    if reps < MIN_REPLICAS:
        raise DomainError("k_na_fourier", f"reps = {reps} is below {MIN_REPLICAS}")
    if n < 1:
        raise DomainError("k_na_fourier", f"n = {n} must be at least 1")
    grid = [float(a) for a in a_grid]
    check_domain("k_na_fourier", h, law, grid)
    beta = law.limit_params.beta
    even_form = walk.alpha == 1 and beta == 2
    if even_form and not (h.even and law.symmetric):
        raise DomainError(
            "k_na_fourier",
            "alpha = 1, beta = 2 needs an even h and a symmetric scenery",
        )
    upper = integration_limit(h, law, quad_spec)
    exponent = grading_exponent(walk.alpha, beta)
    rules = {
        FULL: graded_rule(upper, exponent, quad_spec.panels, quad_spec.order),
        COARSE: graded_rule(upper, exponent, quad_spec.panels // 2, quad_spec.order),
    }
    logging.getLogger(__name__).debug(
        f"{quad_spec.panels} panels of order {quad_spec.order} on (0, {upper:.4g}], "
        f"grading exponent {exponent:.4g}"
    )
    moments = map_chunks(
        _fourier_chunk,
        ChunkPlan(reps),
        merge_all,
        number_of_threads,
        walk=walk,
        law=law,
        h=h,
        n=n,
        a_grid=grid,
        rules=rules,
        even_form=even_form,
        seed=seed,
    )
    tail = cutoff_tail(h, law, n, upper)
    regime = regime_of(walk, law)
    estimates = []
    for a in grid:
        value = moments[(a, FULL)].mean
        rule_error = abs(value - moments[(a, COARSE)].mean)
        if rule_error > quad_spec.tolerance * max(1.0, abs(value)):
            raise QuadratureFailure(
                f"the Fourier representation of K_(n={n}, a={a})",
                rule_error,
                quad_spec.tolerance,
            )
        estimates.append(
            KernelEstimate(
                value=value,
                stat_error=moments[(a, FULL)].stderr,
                trunc_error=rule_error + tail,
                a=a,
                n=n,
                regime=regime,
                doubling_change=abs(value - moments[(a, HALF)].mean),
                panels=quad_spec.panels,
            )
        )
    return estimates


def k_na_fourier(
    walk: WalkModel,
    law: SceneryLaw,
    h: TestFunction,
    n: int,
    a: float,
    reps: int,
    seed: int,
    quad_spec: QuadSpec = QuadSpec(),
    number_of_threads: int = 1,
) -> KernelEstimate:
    return k_na_fourier_grid(
        walk, law, h, n, [a], reps, seed, quad_spec, number_of_threads
    )[0]
