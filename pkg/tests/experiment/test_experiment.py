from pathlib import Path

import pytest

from src.rwrs.errors import ConfigError, RegimeMismatch
from src.rwrs.experiment import (
    DEFAULT_TAUBERIAN_GRID,
    Estimator,
    ExperimentConfig,
    ExperimentKind,
    Tolerances,
    load_experiment,
)
from src.rwrs.kernels.fit import MIN_FIT_POINTS, MIN_FIT_SPAN
from src.rwrs.regimes import Regime
from src.rwrs.stable_laws.scenery import SceneryKind
from src.rwrs.walk_paths import WalkKind
from tests.test_resources.test_data import (
    experiment_values,
    experiments_path,
    get_experiment,
    shipped_experiments_path,
)

KERNEL_KINDS = (ExperimentKind.KERNEL_RECURRENT, ExperimentKind.KERNEL_TRANSIENT)


class TestExperimentConfig:
    def test_load_experiment(self):
        config = load_experiment(experiments_path / "kernel_lattice.yml")

        assert config.kind == ExperimentKind.KERNEL_RECURRENT
        assert config.regime == Regime.C1
        assert config.delta == pytest.approx(0.75)
        assert config.scenery.kind == SceneryKind.RADEMACHER
        assert config.test_function.name == "dirac"
        assert config.a_grid == (2.0, 4.0, 8.0, 16.0, 32.0)
        assert config.estimator == Estimator.DIRECT
        assert config.output is None
        assert config.threads == 1

    def test_defaults(self):
        config = get_experiment("sampler_check.yml")

        assert config.walk.kind == WalkKind.SIMPLE_SYMMETRIC
        assert config.scenery.kind == SceneryKind.EXACT_STABLE
        assert config.test_function.name == "gaussian"
        assert config.tolerances == Tolerances()

    def test_constants_default_to_the_tauberian_grid(self):
        config = get_experiment("constants_logarithmic.yml")

        assert config.u_grid == DEFAULT_TAUBERIAN_GRID

    def test_tolerances_from_file(self):
        config = get_experiment("psi_ratio.yml", ratio_tolerance=0.05)

        assert config.tolerances.ratio == 0.05
        assert config.tolerances.slope == Tolerances().slope

    def test_transient_pair_needs_the_transient_kernel(self):
        with pytest.raises(RegimeMismatch) as exc_info:
            get_experiment("kernel_lattice.yml", beta=0.5, a1=1.0, scenery=None)
        assert exc_info.value.detail == "transient regime: use kernel-transient"

    def test_recurrent_pair_needs_the_recurrent_kernel(self):
        with pytest.raises(RegimeMismatch) as exc_info:
            get_experiment("kernel_transient.yml", beta=1.5)
        assert exc_info.value.detail == "recurrent regime: use kernel-recurrent"

    def test_uncovered_pair(self):
        with pytest.raises(RegimeMismatch):
            get_experiment("psi_ratio.yml", alpha=1.0, beta=0.5, walk="zipf")

    def test_kernel_needs_shifts(self):
        values = experiment_values("kernel_lattice.yml")
        del values["a_grid"]

        with pytest.raises(ConfigError) as exc_info:
            ExperimentConfig.from_dict(values)
        assert exc_info.value.field == "a_grid"

    def test_scenery_must_match_the_limit_law(self):
        with pytest.raises(ConfigError) as exc_info:
            get_experiment("kernel_lattice.yml", a1=1.0)
        assert exc_info.value.field == "scenery"

    def test_walk_must_match_alpha(self):
        with pytest.raises(ConfigError) as exc_info:
            get_experiment("sampler_check.yml", alpha=1.5, walk="simple")
        assert exc_info.value.field == "walk"

    def test_zipf_scenery_needs_its_exponent(self):
        with pytest.raises(ConfigError) as exc_info:
            get_experiment("sampler_check.yml", scenery="zipf")
        assert exc_info.value.field == "scenery_param"

    def test_fourier_is_for_recurrent_kernels(self):
        with pytest.raises(ConfigError) as exc_info:
            get_experiment("psi_ratio.yml", estimator="fourier")
        assert exc_info.value.field == "estimator"

    def test_lattice_scenery_defaults_to_dirac(self):
        config = get_experiment("kernel_lattice.yml", test_function=None)

        assert config.test_function.name == "dirac"

    def test_with_overrides(self):
        config = get_experiment("psi_ratio.yml")

        overridden = config.with_overrides(seed=99, threads=4, output=Path("out.csv"))
        kept = config.with_overrides()

        assert (overridden.seed, overridden.threads) == (99, 4)
        assert overridden.output == Path("out.csv")
        assert kept == config

    def test_kernel_grid_must_span_a_decade(self):
        with pytest.raises(ConfigError) as exc_info:
            get_experiment("kernel_transient.yml", a_grid=[50, 100, 200, 400])
        assert exc_info.value.field == "a_grid"
        assert exc_info.value.detail == (
            "the shifts must be positive and span at least one decade"
        )

    def test_kernel_grid_needs_enough_shifts(self):
        with pytest.raises(ConfigError) as exc_info:
            get_experiment("kernel_lattice.yml", a_grid=[2, 20, 200])
        assert exc_info.value.field == "a_grid"


class TestShippedExperiments:
    @pytest.mark.parametrize(
        "path",
        sorted(shipped_experiments_path.glob("*.yml")),
        ids=lambda path: path.stem,
    )
    def test_loads_and_meets_run_preconditions(self, path):
        config = load_experiment(path)

        if config.kind in KERNEL_KINDS:
            assert len(set(config.a_grid)) >= MIN_FIT_POINTS
            assert min(config.a_grid) > 0
            assert max(config.a_grid) / min(config.a_grid) >= MIN_FIT_SPAN

    def test_every_kind_is_shipped(self):
        kinds = {
            load_experiment(path).kind
            for path in shipped_experiments_path.glob("*.yml")
        }

        assert kinds == set(ExperimentKind)

    def test_transient_kernel_grid(self):
        config = load_experiment(shipped_experiments_path / "kernel_transient_half.yml")

        assert config.kind == ExperimentKind.KERNEL_TRANSIENT
        assert config.a_grid == (40.0, 80.0, 160.0, 400.0)
