import math

import pytest

from src.rwrs.errors import DomainError, RegimeMismatch, TruncationError
from src.rwrs.psi import (
    PsiRegime,
    choose_n_max,
    gamma_asym,
    gamma_asym_derivative,
    psi_closed_beta1,
    psi_derivative_bound,
    psi_derivative_mc,
    psi_mc,
    psi_ratio_diagnostic,
    psi_tilde_gap,
    tail_bound,
)
from src.rwrs.stable_laws import StableCFParams
from src.rwrs.stable_laws.scenery import SceneryLaw
from src.rwrs.walk_paths import WalkModel


class TestPsiClosedForm:
    @pytest.mark.parametrize("t", [0.1, 0.5, 1.0, 2.0])
    @pytest.mark.parametrize("a1", [0.5, 1.0, 2.0])
    def test_monte_carlo_matches_closed_form(self, t, a1):
        params = StableCFParams(beta=1.0, a1=a1)
        closed = psi_closed_beta1(a1, t)
        tolerance = 1e-10 * closed
        n_max = choose_n_max(params, t, tolerance)

        estimate = psi_mc(
            PsiRegime(2.0, params), WalkModel.simple(), t, 100, n_max, 1, tolerance
        )

        assert abs(estimate.value - closed) <= tolerance + estimate.truncation_bound

    def test_pole(self):
        with pytest.raises(DomainError):
            psi_closed_beta1(1.0, 0.0)


class TestTruncation:
    params = StableCFParams(beta=0.5, a1=1.0)

    def test_tail_bound_decreases(self):
        bounds = [tail_bound(self.params, 0.5, n) for n in (10, 100, 1000)]

        assert bounds[0] > bounds[1] > bounds[2] > 0

    def test_choose_n_max_is_smallest(self):
        n_max = choose_n_max(self.params, 0.5, 1e-6)

        assert tail_bound(self.params, 0.5, n_max) < 1e-6
        assert tail_bound(self.params, 0.5, n_max - 1) >= 1e-6

    def test_uncertified_truncation_is_refused(self):
        regime = PsiRegime(2.0, StableCFParams(beta=1.0, a1=1.0))

        with pytest.raises(TruncationError):
            psi_mc(regime, WalkModel.simple(), 0.1, 100, 10, 1, tolerance=1e-6)


class TestGamma:
    def test_beta_one(self):
        regime = PsiRegime(2.0, StableCFParams(beta=1.0, a1=2.0))

        assert gamma_asym(regime, -0.25) == pytest.approx(2.0)

    def test_power_law(self):
        regime = PsiRegime(2.0, StableCFParams(beta=2.0, a1=0.5), big_c=1.5)
        delta = 0.75

        expected = 1.5 * 0.1 ** (-1 / delta) * 0.5 ** (-1 / (delta * 2))
        assert gamma_asym(regime, 0.1) == pytest.approx(expected)
        assert gamma_asym_derivative(regime, 0.1) == pytest.approx(
            -expected / (delta * 0.1)
        )

    def test_logarithmic_correction(self):
        regime = PsiRegime(1.0, StableCFParams(beta=2.0, a1=1.0), c_const=2.0)

        expected = (-math.log(0.01)) ** -1 / (2.0 * 0.01)
        assert gamma_asym(regime, 0.1) == pytest.approx(expected)

    def test_missing_constants(self):
        with pytest.raises(RegimeMismatch):
            PsiRegime(2.0, StableCFParams(beta=1.5, a1=1.0))
        with pytest.raises(RegimeMismatch):
            PsiRegime(1.0, StableCFParams(beta=1.5, a1=1.0))


class TestRatioDiagnostic:
    def test_beta_one_ratio(self):
        regime = PsiRegime(2.0, StableCFParams(beta=1.0, a1=1.0))

        rows = psi_ratio_diagnostic(regime, WalkModel.simple(), [0.2, 0.05], 100, 1)

        for row in rows:
            expected = row.t / math.expm1(row.t)
            assert row.ratio.real == pytest.approx(expected, abs=1e-3)
        assert abs(rows[1].ratio - 1) < abs(rows[0].ratio - 1)

    def test_grid_outside_the_window(self):
        regime = PsiRegime(2.0, StableCFParams(beta=1.0, a1=1.0))

        with pytest.raises(DomainError):
            psi_ratio_diagnostic(regime, WalkModel.simple(), [0.7], 100, 1)


class TestDerivative:
    def test_central_difference_matches_closed_form(self):
        regime = PsiRegime(2.0, StableCFParams(beta=1.0, a1=1.0))
        t, step = 0.5, 0.01
        closed = (psi_closed_beta1(1.0, t + step) - psi_closed_beta1(1.0, t - step)) / (
            2 * step
        )

        estimate = psi_derivative_mc(regime, WalkModel.simple(), t, step, 100, seed=1)

        assert estimate.value.real < 0
        assert abs(estimate.value - closed) <= estimate.truncation_bound + 1e-6

    def test_step_must_stay_inside_t(self):
        regime = PsiRegime(2.0, StableCFParams(beta=1.0, a1=1.0))
        with pytest.raises(DomainError):
            psi_derivative_mc(regime, WalkModel.simple(), 0.5, 0.6, 100, seed=1)


class TestDerivativeBound:
    def test_transient_envelope(self):
        params = StableCFParams(beta=0.5, a1=1.0)

        assert psi_derivative_bound(params, 1.0) > psi_derivative_bound(params, 2.0) > 0

    def test_needs_beta_below_one(self):
        with pytest.raises(DomainError):
            psi_derivative_bound(StableCFParams(beta=1.5, a1=1.0), 1.0)


class TestTildeGap:
    def test_exact_scenery_has_no_gap(self):
        params = StableCFParams(beta=2.0, a1=1.0)
        regime = PsiRegime(2.0, params, big_c=1.0)

        law = SceneryLaw.exact_stable(params)
        gap = psi_tilde_gap(regime, WalkModel.simple(), law, 0.5, 200, 200, 4)

        assert gap.gap < 1e-9

    def test_scenery_must_match(self):
        regime = PsiRegime(2.0, StableCFParams(beta=2.0, a1=1.0), big_c=1.0)

        with pytest.raises(RegimeMismatch):
            psi_tilde_gap(
                regime, WalkModel.simple(), SceneryLaw.rademacher(), 0.5, 100, 10, 4
            )
