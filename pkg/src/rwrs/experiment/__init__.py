"""
## Experiments

An experiment file is a flat key-value mapping. `ExperimentConfig.from_dict`
validates it against the bundled schema, builds the walk, the scenery law and the test
function, and maps `(alpha, beta)` to its regime. Pairs without a regime, and experiment
kinds that do not fit the regime, are rejected before anything is simulated.
"""
import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Optional

from ..errors import ConfigError, DomainError, FitError, RegimeMismatch
from ..kernels import TestFunction, catalog_function
from ..kernels.fit import check_fit_shifts
from ..regimes import Regime, classify, delta_exponent
from ..renewal import default_walk
from ..stable_laws import StableCFParams
from ..stable_laws.scenery import SceneryLaw
from ..utilities.pyaml_env import parse_config
from ..validation import validate_experiment
from ..walk_paths import WalkModel

DEFAULT_T_GRID = (0.2, 0.1, 0.05)
DEFAULT_U_GRID = (0.5, 1.0, 2.0)
DEFAULT_TAUBERIAN_GRID = (1e-6, 1e-30)
DEFAULT_PANELS = 16


class ExperimentKind(Enum):
    PSI_RATIO = "psi-ratio"
    KERNEL_RECURRENT = "kernel-recurrent"
    KERNEL_TRANSIENT = "kernel-transient"
    CONSTANTS = "constants"
    SAMPLER_CHECK = "sampler-check"

    def __str__(self):
        return self.value


class Estimator(Enum):
    DIRECT = "direct"
    FOURIER = "fourier"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Tolerances:
    truncation: float = 1e-4
    slope: float = 0.1
    level: float = 0.3
    ratio: float = 0.15

    @staticmethod
    def from_dict(values: dict) -> "Tolerances":
        defaults = Tolerances()
        return Tolerances(
            truncation=values.get("truncation_tolerance") or defaults.truncation,
            slope=values.get("slope_tolerance") or defaults.slope,
            level=values.get("level_tolerance") or defaults.level,
            ratio=values.get("ratio_tolerance") or defaults.ratio,
        )


def _walk(values: dict, alpha: float) -> WalkModel:
    kind = values.get("walk")
    param = values.get("walk_param")
    try:
        if kind is None:
            walk = default_walk(alpha)
        elif kind == "simple":
            walk = WalkModel.simple()
        elif kind == "lazy":
            walk = WalkModel.lazy(0.5 if param is None else param)
        else:
            walk = WalkModel.lattice_zipf(alpha + 1 if param is None else param)
    except DomainError as exc:
        raise ConfigError("walk_param", exc.detail) from exc
    if walk.alpha != alpha:
        raise ConfigError(
            "walk", f"a {walk.kind} walk has index {walk.alpha}, not {alpha}"
        )
    return walk


def _scenery(values: dict, params: StableCFParams) -> SceneryLaw:
    kind = values.get("scenery") or "stable"
    param = values.get("scenery_param")
    try:
        if kind == "stable":
            return SceneryLaw.exact_stable(params)
        if kind == "rademacher":
            law = SceneryLaw.rademacher()
        elif kind == "gaussian":
            law = SceneryLaw.gaussian(2 * params.a1 if param is None else param)
        elif param is None:
            raise ConfigError("scenery_param", "zipf sceneries need a tail exponent")
        else:
            law = SceneryLaw.lattice_zipf(param)
    except DomainError as exc:
        raise ConfigError("scenery_param", exc.detail) from exc
    limit = law.limit_params
    if limit.beta != params.beta or not (
        math.isclose(limit.a1, params.a1, rel_tol=1e-9)
        and math.isclose(limit.a2, params.a2, rel_tol=1e-9, abs_tol=1e-12)
    ):
        raise ConfigError(
            "scenery",
            f"a {kind} scenery is attracted to beta={limit.beta:.17g}, "
            f"a1={limit.a1:.17g}, a2={limit.a2:.17g}",
        )
    return law


def _test_function(values: dict, law: SceneryLaw) -> TestFunction:
    name = values.get("test_function") or ("dirac" if law.lattice else "gaussian")
    try:
        return catalog_function(name)
    except DomainError as exc:
        raise ConfigError("test_function", exc.detail) from exc


def _grid(values: dict, key: str, default: tuple = ()) -> tuple[float, ...]:
    grid = values.get(key)
    return default if grid is None else tuple(float(value) for value in grid)


@dataclass(frozen=True)
class ExperimentConfig:
    kind: ExperimentKind
    alpha: float
    params: StableCFParams
    walk: WalkModel
    scenery: SceneryLaw
    test_function: TestFunction
    reps: int
    seed: int
    a_grid: tuple[float, ...] = ()
    t_grid: tuple[float, ...] = DEFAULT_T_GRID
    u_grid: tuple[float, ...] = DEFAULT_U_GRID
    n: Optional[int] = None
    n_max: Optional[int] = None
    threads: int = 1
    l_moment_n: int = 1 << 13
    l_moment_reps: int = 2000
    a0_n: int = 1 << 12
    a0_reps: int = 2000
    estimator: Estimator = Estimator.DIRECT
    panels: int = DEFAULT_PANELS
    derivative_step: Optional[float] = None
    tolerances: Tolerances = Tolerances()
    output: Optional[Path] = None

    @property
    def regime(self) -> Regime:
        return classify(self.alpha, self.params.beta)

    @property
    def delta(self) -> float:
        return delta_exponent(self.alpha, self.params.beta)

    @staticmethod
    def from_dict(values: dict) -> "ExperimentConfig":
        validate_experiment(values)
        kind = ExperimentKind(values["kind"])
        alpha = float(values["alpha"])
        params = StableCFParams(
            beta=float(values["beta"]),
            a1=float(values["a1"]),
            a2=float(values.get("a2") or 0.0),
        )
        regime = classify(alpha, params.beta)
        scenery = _scenery(values, params)
        default_u = DEFAULT_TAUBERIAN_GRID if kind == ExperimentKind.CONSTANTS else None
        config = ExperimentConfig(
            kind=kind,
            alpha=alpha,
            params=params,
            walk=_walk(values, alpha),
            scenery=scenery,
            test_function=_test_function(values, scenery),
            reps=values["reps"],
            seed=values["seed"],
            a_grid=_grid(values, "a_grid"),
            t_grid=_grid(values, "t_grid", DEFAULT_T_GRID),
            u_grid=_grid(values, "u_grid", default_u or DEFAULT_U_GRID),
            n=values.get("n"),
            n_max=values.get("n_max"),
            threads=values.get("threads") or 1,
            l_moment_n=values.get("l_moment_n") or 1 << 13,
            l_moment_reps=values.get("l_moment_reps") or 2000,
            a0_n=values.get("a0_n") or 1 << 12,
            a0_reps=values.get("a0_reps") or 2000,
            estimator=Estimator(values.get("estimator") or "direct"),
            panels=values.get("panels") or DEFAULT_PANELS,
            derivative_step=values.get("derivative_step"),
            tolerances=Tolerances.from_dict(values),
            output=Path(values["output"]) if values.get("output") else None,
        )
        config.check_kind(regime)
        logging.getLogger(__name__).debug(
            f"{kind} experiment in regime {regime} (delta = {config.delta:.6g})"
        )
        return config

    def check_kind(self, regime: Regime):
        alpha, beta = self.alpha, self.params.beta
        kernel_kinds = (
            ExperimentKind.KERNEL_RECURRENT,
            ExperimentKind.KERNEL_TRANSIENT,
        )
        if self.kind == ExperimentKind.KERNEL_RECURRENT and regime.transient:
            raise RegimeMismatch(alpha, beta, "transient regime: use kernel-transient")
        if self.kind == ExperimentKind.KERNEL_TRANSIENT and not regime.transient:
            raise RegimeMismatch(alpha, beta, "recurrent regime: use kernel-recurrent")
        if self.kind in kernel_kinds:
            if not self.a_grid:
                raise ConfigError("a_grid", f"{self.kind} needs shifts")
            try:
                check_fit_shifts(self.a_grid)
            except FitError as exc:
                raise ConfigError("a_grid", exc.message) from exc
        if self.kind == ExperimentKind.KERNEL_RECURRENT and self.n is None:
            raise ConfigError("n", "kernel-recurrent needs the number of steps")
        if self.kind == ExperimentKind.KERNEL_TRANSIENT and self.n_max is None:
            raise ConfigError("n_max", "kernel-transient needs the truncation")
        if (
            self.estimator == Estimator.FOURIER
            and self.kind != ExperimentKind.KERNEL_RECURRENT
        ):
            raise ConfigError("estimator", "fourier is for kernel-recurrent only")

    def with_overrides(
        self,
        seed: Optional[int] = None,
        threads: Optional[int] = None,
        output: Optional[Path] = None,
    ) -> "ExperimentConfig":
        """Command line values replace the file's; `None` keeps them."""
        return replace(
            self,
            seed=self.seed if seed is None else seed,
            threads=self.threads if threads is None else threads,
            output=self.output if output is None else Path(output),
        )


def load_experiment(path: Path) -> ExperimentConfig:
    return ExperimentConfig.from_dict(parse_config(path))
