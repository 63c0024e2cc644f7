import numpy as np
import pytest

from src.rwrs.core import SceneryModel
from src.rwrs.errors import DomainError
from src.rwrs.kernels import DIRAC_AT_ZERO, GAUSSIAN, SQRT_2PI, Domain, TestFunction
from src.rwrs.kernels.direct import k_na_direct_grid
from src.rwrs.kernels.fourier import (
    QuadSpec,
    graded_rule,
    grading_exponent,
    k_na_fourier,
    k_na_fourier_grid,
)
from src.rwrs.stable_laws import StableCFParams
from src.rwrs.stable_laws.scenery import SceneryLaw
from src.rwrs.walk_paths import WalkModel
from tests.kernels import exact_dirac_kernel


class TestGradedRule:
    def test_flattens_the_singularity(self):
        rule = graded_rule(1.0, 2 / 3, 16, 8)

        integral = np.dot(rule.weights, rule.nodes ** (-1 / 3))
        assert integral == pytest.approx(1.5, rel=1e-12)
        assert np.all((rule.nodes > 0) & (rule.nodes <= 1))

    @pytest.mark.parametrize(
        "alpha, beta, exponent",
        [(2.0, 2.0, 2 / 3), (2.0, 1.0, 1.0), (2.0, 1.5, 0.8), (1.0, 2.0, 0.25)],
    )
    def test_grading_exponent(self, alpha, beta, exponent):
        assert grading_exponent(alpha, beta) == pytest.approx(exponent)

    def test_invalid_spec(self):
        with pytest.raises(DomainError):
            QuadSpec(panels=1)
        with pytest.raises(DomainError):
            QuadSpec(cutoff=0.0)


class TestFourierKernel:
    walk = WalkModel.simple()

    def test_lattice_matches_enumeration(self):
        estimates = k_na_fourier_grid(
            self.walk, SceneryLaw.rademacher(), DIRAC_AT_ZERO, 6, [1, 2], 2000, seed=1
        )

        for estimate in estimates:
            exact = exact_dirac_kernel(6, int(estimate.a))
            slack = 5 * estimate.stat_error + estimate.trunc_error + 1e-6
            assert abs(estimate.value - exact) <= slack
            assert estimate.panels == 16

    def test_agrees_with_the_direct_estimator(self):
        law = SceneryLaw.exact_stable(StableCFParams(beta=2.0, a1=1.0))
        fourier = k_na_fourier_grid(self.walk, law, GAUSSIAN, 32, [1, 3], 2000, seed=4)
        direct = k_na_direct_grid(
            self.walk, SceneryModel(law, seed=4), GAUSSIAN, 32, [1, 3], 20000, seed=4
        )

        for left, right in zip(fourier, direct):
            slack = 5 * (left.stat_error + right.stat_error) + left.trunc_error
            assert abs(left.value - right.value) <= slack

    def test_thread_count_does_not_matter(self):
        law = SceneryLaw.gaussian(1.0)
        arguments = (self.walk, law, GAUSSIAN, 16, [2.0], 700, 5)

        single = k_na_fourier_grid(*arguments, QuadSpec(panels=8))
        threaded = k_na_fourier_grid(
            *arguments, QuadSpec(panels=8), number_of_threads=2
        )

        assert single == threaded

    def test_even_form_needs_an_even_function(self):
        shifted = TestFunction(
            name="shifted",
            h=lambda x: np.exp(-np.square(np.asarray(x) - 1) / 2),
            hat_h=lambda t: SQRT_2PI
            * np.exp(-np.square(t) / 2)
            * np.exp(-1j * np.asarray(t)),
            integral=SQRT_2PI,
            domain=Domain.CONTINUUM,
            even=False,
        )

        with pytest.raises(DomainError):
            k_na_fourier(
                WalkModel.lattice_zipf(2.0),
                SceneryLaw.gaussian(1.0),
                shifted,
                8,
                1.0,
                100,
                1,
            )

    def test_too_few_replicas(self):
        with pytest.raises(DomainError):
            k_na_fourier(self.walk, SceneryLaw.rademacher(), DIRAC_AT_ZERO, 8, 1, 99, 1)
