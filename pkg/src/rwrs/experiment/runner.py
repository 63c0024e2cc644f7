"""Runs experiments and judges their rows against the renewal constants."""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from . import Estimator, ExperimentConfig, ExperimentKind
from .results import Check, ExperimentResult, ResultRow, Verdict
from ..core import SceneryModel
from ..errors import QuadratureFailure
from ..kernels import KernelEstimate
from ..kernels.direct import k_na_direct_grid, k_transient_sum_grid
from ..kernels.fit import FitModel, model_for, predicted_level, renewal_fit
from ..kernels.fourier import QuadSpec, k_na_fourier_grid
from ..psi import (
    PsiRegime,
    gamma_asym_derivative,
    psi_derivative_mc,
    psi_ratio_diagnostic,
)
from ..psi.special import tauberian_ratio
from ..regimes import Regime
from ..renewal import (
    RegimeConstants,
    l_moment_estimate,
    limit_constant,
    psi_constant,
)
from ..renewal.quadrature import (
    KernelKind,
    fourier_identity_check,
    oscillatory_integral,
)
from ..stable_laws.scenery import empirical_cf
from ..utilities.random import StreamPurpose, chunk_generator
from ..walk_paths.normalization import estimate_a0

SAMPLER_BAND = 6.0
QUADRATURE_AGREEMENT = 1e-6
DERIVATIVE_BAND = (0.5, 2.0)
TAUBERIAN_ORDERS = (0, 1)
IDENTITY_SHIFT = 0.7


@dataclass(frozen=True)
class MeasuredConstants:
    constants: RegimeConstants
    relative_error: float
    """Relative standard error the Monte Carlo moment passes on to the regime constant."""


def measure_constants(config: ExperimentConfig) -> MeasuredConstants:
    """Estimates the moment (`alpha > 1`) or `a0` (`alpha = 1`) the regime constant needs."""
    alpha, beta = config.alpha, config.params.beta
    if beta == 1:
        return MeasuredConstants(RegimeConstants(alpha, config.params), 0.0)
    if alpha > 1:
        l_moment = l_moment_estimate(
            alpha,
            beta,
            config.l_moment_n,
            config.l_moment_reps,
            config.seed,
            walk=config.walk,
            number_of_threads=config.threads,
        )
        return MeasuredConstants(
            RegimeConstants(alpha, config.params, l_moment=l_moment),
            l_moment.stderr / l_moment.value,
        )
    a0 = estimate_a0(
        config.walk,
        config.a0_n,
        config.a0_reps,
        config.seed,
        number_of_threads=config.threads,
    )
    return MeasuredConstants(
        RegimeConstants(alpha, config.params, a0=a0.value),
        abs(1 - beta) * a0.stderr / a0.value,
    )


def _psi_regime(config: ExperimentConfig, measured: MeasuredConstants) -> PsiRegime:
    constants = measured.constants
    if config.params.beta == 1:
        return PsiRegime(config.alpha, config.params)
    if config.alpha == 1:
        return PsiRegime(config.alpha, config.params, c_const=constants.c)
    return PsiRegime(config.alpha, config.params, big_c=psi_constant(constants))


def run_psi_ratio(config: ExperimentConfig) -> ExperimentResult:
    regime = _psi_regime(config, measure_constants(config))
    label = str(config.regime)
    ratio_rows = psi_ratio_diagnostic(
        regime,
        config.walk,
        config.t_grid,
        config.reps,
        config.seed,
        config.tolerances.truncation,
        config.threads,
    )
    rows = [
        ResultRow.of(
            label,
            row.t,
            row.psi.value,
            row.psi.stderr,
            row.psi.truncation_bound,
            row.gamma.real,
        )
        for row in ratio_rows
    ]
    ordered = sorted(ratio_rows, key=lambda row: -abs(row.t))
    distances = [abs(row.ratio - 1) for row in ordered]
    trend = all(
        distances[i + 1] <= distances[i] + 2 * (ordered[i].error + ordered[i + 1].error)
        for i in range(len(ordered) - 1)
    )
    listing = ", ".join(
        f"{row.t:g}: {distance:.3g}" for row, distance in zip(ordered, distances)
    )
    checks = [
        Check("trend", trend, f"|psi/gamma - 1| by decreasing |t|: {listing}"),
        Check(
            "band",
            distances[-1] <= config.tolerances.ratio,
            f"|psi/gamma - 1| = {distances[-1]:.3g} at t = {ordered[-1].t:g}",
        ),
    ]
    if config.derivative_step:
        low, high = DERIVATIVE_BAND
        for t in config.t_grid:
            estimate = psi_derivative_mc(
                regime,
                config.walk,
                t,
                config.derivative_step,
                config.reps,
                config.seed,
                config.tolerances.truncation,
                config.threads,
            )
            expected = gamma_asym_derivative(regime, t)
            rows.append(
                ResultRow.of(
                    f"{label}:derivative",
                    t,
                    estimate.value,
                    estimate.stderr,
                    estimate.truncation_bound,
                    expected.real,
                )
            )
            ratio = (estimate.value / expected).real
            checks.append(
                Check(
                    f"derivative t={t:g}",
                    low <= ratio <= high,
                    f"psi'/gamma' = {ratio:.4g}",
                )
            )
    return ExperimentResult(str(config.kind), label, rows, Verdict(tuple(checks)))


def fit_rows(config: ExperimentConfig, rows: Sequence[ResultRow]) -> ExperimentResult:
    """
    Fits kernel rows, fresh or read back from a result file. The predicted level is recovered
    from the rows, which carry the prediction they were compared with.
    """
    regime = config.regime
    model = model_for(regime, config.delta, config.params.beta)
    growth = model.growth(rows[0].a)
    level = rows[0].predicted / growth if growth else math.nan
    samples = [
        (
            row.a,
            KernelEstimate(
                value=row.estimate,
                stat_error=row.stat_err,
                trunc_error=row.trunc_err,
                a=row.a,
                n=config.n or config.n_max or 0,
                regime=regime,
            ),
        )
        for row in rows
    ]
    report = renewal_fit(samples, model, predicted=level)
    checks = []
    if model.kind == FitModel.POWER_LAW:
        checks.append(
            Check(
                "slope",
                report.slope_within(config.tolerances.slope),
                f"slope {report.slope:.4g} +- {report.slope_stderr:.2g}, "
                f"expected {report.expected_slope:.4g}",
            )
        )
    checks.append(
        Check(
            "level",
            report.level_within(config.tolerances.level),
            f"level {report.level:.4g} +- {report.level_stderr:.2g}, "
            f"predicted {level:.4g} (ratio {report.ratio:.4g})",
            hard=regime == Regime.C2,
        )
    )
    return ExperimentResult(
        str(config.kind), str(regime), list(rows), Verdict(tuple(checks)), fit=report
    )


def _kernel_result(
    config: ExperimentConfig, estimates: Sequence[KernelEstimate]
) -> ExperimentResult:
    measured = measure_constants(config)
    model = model_for(config.regime, config.delta, config.params.beta)
    level = predicted_level(measured.constants, config.test_function)
    rows = [
        ResultRow.of(
            str(config.regime),
            estimate.a,
            estimate.value,
            estimate.stat_error,
            estimate.trunc_error + estimate.doubling_change,
            level * model.growth(estimate.a),
        )
        for estimate in estimates
    ]
    return fit_rows(config, rows)


def run_kernel_recurrent(config: ExperimentConfig) -> ExperimentResult:
    if config.estimator == Estimator.FOURIER:
        estimates = k_na_fourier_grid(
            config.walk,
            config.scenery,
            config.test_function,
            config.n,  # type: ignore
            config.a_grid,
            config.reps,
            config.seed,
            QuadSpec(panels=config.panels),
            config.threads,
        )
    else:
        estimates = k_na_direct_grid(
            config.walk,
            SceneryModel(config.scenery, config.seed),
            config.test_function,
            config.n,  # type: ignore
            config.a_grid,
            config.reps,
            config.seed,
            config.threads,
        )
    return _kernel_result(config, estimates)


def run_kernel_transient(config: ExperimentConfig) -> ExperimentResult:
    estimates = k_transient_sum_grid(
        config.walk,
        SceneryModel(config.scenery, config.seed),
        config.test_function,
        config.a_grid,
        config.n_max,  # type: ignore
        config.reps,
        config.seed,
        config.threads,
    )
    return _kernel_result(config, estimates)


def oscillatory_rows(config: ExperimentConfig) -> tuple[list[ResultRow], list[Check]]:
    """One row per distinct exponent `1 / delta` and `beta` in (0, 2) other than 1."""
    rows, checks = [], []
    evaluated: list[float] = []
    parameters = (
        (KernelKind.DELTA, config.delta),
        (KernelKind.BETA, config.params.beta),
    )
    for kind, parameter in parameters:
        exponent = 1 / parameter if kind == KernelKind.DELTA else parameter
        if not 0 < exponent < 2 or exponent == 1:
            continue
        if any(math.isclose(exponent, seen, rel_tol=1e-12) for seen in evaluated):
            continue
        evaluated.append(exponent)
        name = f"oscillatory s={exponent:.6g}"
        try:
            result = oscillatory_integral(kind, parameter)
        except QuadratureFailure as exc:
            checks.append(Check(name, False, exc.message))
            continue
        rows.append(
            ResultRow.of(
                f"oscillatory:{kind}",
                exponent,
                result.quadrature,
                0.0,
                result.error_estimate,
                result.closed_form.real,
            )
        )
        checks.append(
            Check(
                name,
                result.disagreement <= QUADRATURE_AGREEMENT,
                f"|closed form - quadrature| = {result.disagreement:.2e}",
            )
        )
    return rows, checks


def run_constants(config: ExperimentConfig) -> ExperimentResult:
    measured = measure_constants(config)
    regime = config.regime
    label = str(regime)
    value = limit_constant(regime, measured.constants)
    rows = [
        ResultRow.of(
            label, 0.0, value, abs(value) * measured.relative_error, 0.0, value
        )
    ]
    checks = [Check("constant", math.isfinite(value), f"{label} = {value:.10g}")]
    integral_rows, integral_checks = oscillatory_rows(config)
    rows.extend(integral_rows)
    checks.extend(integral_checks)
    delta, beta = config.delta, config.params.beta
    if delta > 1:
        lhs, rhs = fourier_identity_check(delta, beta, config.params, IDENTITY_SHIFT)
        rows.append(ResultRow.of("c+-", IDENTITY_SHIFT, lhs, 0.0, 0.0, rhs))
        checks.append(
            Check(
                "c+- identity",
                abs(lhs - rhs) <= QUADRATURE_AGREEMENT * max(1.0, abs(rhs)),
                f"lhs {lhs:.10g}, rhs {rhs:.10g}",
            )
        )
    if config.alpha == 1 and beta != 1:
        smallest = min(config.u_grid)
        for p in TAUBERIAN_ORDERS:
            for u in config.u_grid:
                ratio = tauberian_ratio(p, beta, u)
                rows.append(ResultRow.of(f"tauberian:p={p}", u, ratio, 0.0, 0.0, 1.0))
                checks.append(
                    Check(
                        f"tauberian p={p} u={u:g}",
                        abs(ratio - 1) <= config.tolerances.ratio,
                        f"ratio {ratio:.6g}",
                        hard=u == smallest,
                    )
                )
    return ExperimentResult(str(config.kind), label, rows, Verdict(tuple(checks)))


def run_sampler_check(config: ExperimentConfig) -> ExperimentResult:
    grid = np.asarray(config.u_grid, dtype=np.float64)
    rng = chunk_generator(config.seed, StreamPurpose.SAMPLER, 0)
    values = empirical_cf(config.scenery, grid, config.reps, rng)
    exact = np.asarray(config.scenery.cf(grid)).reshape(grid.shape)
    stderr = 1 / math.sqrt(config.reps)
    label = str(config.scenery.kind)
    rows = [
        ResultRow.of(label, u, value, stderr, 0.0, expected.real, with_ratio=False)
        for u, value, expected in zip(grid, values, exact)
    ]
    deviation = float(np.max(np.abs(values - exact)))
    band = SAMPLER_BAND * stderr
    checks = (
        Check(
            "empirical cf",
            deviation <= band,
            f"max deviation {deviation:.3g} against a band of {band:.3g}",
        ),
    )
    return ExperimentResult(str(config.kind), str(config.regime), rows, Verdict(checks))


RUNNERS: dict[ExperimentKind, Callable[[ExperimentConfig], ExperimentResult]] = {
    ExperimentKind.PSI_RATIO: run_psi_ratio,
    ExperimentKind.KERNEL_RECURRENT: run_kernel_recurrent,
    ExperimentKind.KERNEL_TRANSIENT: run_kernel_transient,
    ExperimentKind.CONSTANTS: run_constants,
    ExperimentKind.SAMPLER_CHECK: run_sampler_check,
}


def run_experiment(
    config: ExperimentConfig, logger: Optional[logging.Logger] = None
) -> ExperimentResult:
    """Rows and verdict of the experiment; a pure function of the config, whatever `threads`."""
    logger = logger or logging.getLogger(__name__)
    logger.info(
        f"{config.kind}: alpha={config.alpha}, beta={config.params.beta} "
        f"({config.regime}), seed {config.seed}, {config.threads} thread(s)"
    )
    result = RUNNERS[config.kind](config)
    logger.info(f"{len(result.rows)} row(s), verdict {result.verdict.label}")
    return result
