"""
Fits of the renewal asymptotics in `a`.

| model          | regimes  | coordinates                                   | level                |
|----------------|----------|-----------------------------------------------|----------------------|
| `powerLaw`     | C1, C0   | `log K` against `log a`                       | `exp(intercept)`     |
| `logLaw`       | C2       | `K` against `log a`                           | slope                |
| `logPowerLaw`  | D1       | `K (log(a^beta) / a)^(beta - 1)`, constant    | weighted mean        |
| `linearLogLaw` | D2       | `K log(a^2) / a`, constant                    | weighted mean        |
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from . import KernelEstimate, TestFunction
from ..errors import FitError
from ..regimes import Regime
from ..renewal import RegimeConstants, limit_constant

MIN_FIT_POINTS = 4
MIN_FIT_SPAN = 10.0


class FitModel(Enum):
    POWER_LAW = "powerLaw"
    LOG_LAW = "logLaw"
    LOG_POWER_LAW = "logPowerLaw"
    LINEAR_LOG_LAW = "linearLogLaw"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RenewalModel:
    kind: FitModel
    expected_exponent: Optional[float] = None
    beta: Optional[float] = None

    @staticmethod
    def power_law(expected_exponent: float) -> "RenewalModel":
        return RenewalModel(FitModel.POWER_LAW, expected_exponent=expected_exponent)

    @staticmethod
    def log_law() -> "RenewalModel":
        return RenewalModel(FitModel.LOG_LAW)

    @staticmethod
    def log_power_law(beta: float) -> "RenewalModel":
        return RenewalModel(FitModel.LOG_POWER_LAW, beta=beta)

    @staticmethod
    def linear_log_law() -> "RenewalModel":
        return RenewalModel(FitModel.LINEAR_LOG_LAW, beta=2.0)

    @property
    def levelled(self) -> bool:
        """True when the transformed data should be flat in `a`."""
        return self.kind in (FitModel.LOG_POWER_LAW, FitModel.LINEAR_LOG_LAW)

    def growth(self, a: float) -> float:
        """`K ~ level * growth(a)` as `a` grows."""
        if a <= 0:
            return math.nan
        if self.kind == FitModel.POWER_LAW:
            return a**self.expected_exponent  # type: ignore
        if self.kind == FitModel.LOG_LAW:
            return math.log(a)
        beta = self.beta or 2.0
        return (a / (beta * math.log(a))) ** (beta - 1) if a > 1 else math.nan

    def transform(
        self, a: np.ndarray, values: np.ndarray, errors: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """`(x, y, sigma)` in the coordinates where the model is linear."""
        x = np.log(a)
        if self.kind == FitModel.POWER_LAW:
            if np.any(values <= 0):
                raise FitError("powerLaw needs positive kernel estimates")
            return x, np.log(values), errors / values
        if self.kind == FitModel.LOG_LAW:
            return x, values, errors
        if np.any(a <= 1):
            raise FitError(f"{self.kind} needs shifts above 1")
        beta = self.beta or 2.0
        factor = (beta * x / a) ** (beta - 1)
        return x, values * factor, errors * factor


@dataclass(frozen=True)
class FitReport:
    model: RenewalModel
    slope: float
    slope_stderr: float
    level: float
    level_stderr: float
    points: int
    predicted: Optional[float] = None

    @property
    def ratio(self) -> float:
        return self.level / self.predicted if self.predicted else math.nan

    @property
    def expected_slope(self) -> float:
        if self.model.kind == FitModel.POWER_LAW:
            return self.model.expected_exponent  # type: ignore
        return 0.0 if self.model.levelled else math.nan

    def slope_within(self, tolerance: float) -> bool:
        return abs(self.slope - self.expected_slope) <= tolerance

    def level_within(self, relative_tolerance: float) -> bool:
        return abs(self.ratio - 1) <= relative_tolerance


def _weighted_line(
    x: np.ndarray, y: np.ndarray, sigma: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Intercept and slope with their covariance; unit weights when an error is zero."""
    known = bool(np.all(sigma > 0))
    weights = 1 / sigma if known else np.ones_like(x)
    design = np.column_stack([np.ones_like(x), x]) * weights[:, None]
    coefficients, *_ = np.linalg.lstsq(design, y * weights, rcond=None)
    covariance = np.linalg.inv(design.T @ design)
    if not known:
        residuals = design @ coefficients - y
        covariance = covariance * float(residuals @ residuals) / max(len(x) - 2, 1)
    return coefficients, covariance


def _weighted_level(y: np.ndarray, sigma: np.ndarray) -> tuple[float, float]:
    if np.all(sigma > 0):
        weights = sigma**-2
        return float(np.dot(weights, y) / weights.sum()), float(weights.sum() ** -0.5)
    return float(np.mean(y)), float(np.std(y, ddof=1) / math.sqrt(len(y)))


def check_fit_shifts(shifts) -> None:
    shifts = np.asarray(shifts, dtype=np.float64)
    if len(np.unique(shifts)) < MIN_FIT_POINTS:
        raise FitError(f"a fit needs at least {MIN_FIT_POINTS} distinct shifts")
    if shifts.min() <= 0 or shifts.max() / shifts.min() < MIN_FIT_SPAN:
        raise FitError("the shifts must be positive and span at least one decade")


def renewal_fit(
    samples: Sequence[tuple[float, KernelEstimate]],
    model: RenewalModel,
    predicted: Optional[float] = None,
) -> FitReport:
    """Weighted least squares of the kernel estimates in the model's coordinates."""
    shifts = np.array([a for a, _ in samples], dtype=np.float64)
    check_fit_shifts(shifts)
    values = np.array([estimate.value.real for _, estimate in samples])
    errors = np.array([estimate.total_error for _, estimate in samples])
    x, y, sigma = model.transform(shifts, values, errors)
    coefficients, covariance = _weighted_line(x, y, sigma)
    slope, slope_stderr = float(coefficients[1]), float(math.sqrt(covariance[1, 1]))
    if model.kind == FitModel.POWER_LAW:
        level = math.exp(coefficients[0])
        level_stderr = level * math.sqrt(covariance[0, 0])
    elif model.kind == FitModel.LOG_LAW:
        level, level_stderr = slope, slope_stderr
    else:
        level, level_stderr = _weighted_level(y, sigma)
    report = FitReport(
        model=model,
        slope=slope,
        slope_stderr=slope_stderr,
        level=level,
        level_stderr=level_stderr,
        points=len(shifts),
        predicted=predicted,
    )
    logging.getLogger(__name__).info(
        f"{model.kind}: slope {slope:.4g} +- {slope_stderr:.2g}, "
        f"level {level:.4g} +- {level_stderr:.2g}"
    )
    return report


def model_for(regime: Regime, delta: float, beta: float) -> RenewalModel:
    if regime in (Regime.C1, Regime.C0):
        return RenewalModel.power_law(1 / delta - 1)
    if regime == Regime.C2:
        return RenewalModel.log_law()
    if regime == Regime.D1:
        return RenewalModel.log_power_law(beta)
    return RenewalModel.linear_log_law()


def predicted_level(constants: RegimeConstants, h: TestFunction) -> float:
    """The regime's constant times `I[h]`, from the renewal constants alone."""
    return limit_constant(constants.regime, constants) * h.integral
