import math

import pytest
from scipy.special import gamma

from src.rwrs.errors import DomainError, RegimeMismatch
from src.rwrs.regimes import Regime
from src.rwrs.renewal import (
    LMomentEstimate,
    RegimeConstants,
    c_constant,
    c_plus_minus,
    default_walk,
    l_moment_estimate,
    limit_constant,
    mirrored,
    psi_constant,
)
from src.rwrs.stable_laws import StableCFParams
from src.rwrs.walk_paths import WalkKind

MOMENT = LMomentEstimate(value=0.8, stderr=0.01, n=1024, reps=500)


class TestConstants:
    def test_c_constant(self):
        assert c_constant(1.0, 1.0) == pytest.approx(1.0)
        assert c_constant(1 / math.pi, 1.5) == pytest.approx(gamma(2.5))
        assert c_constant(2.0, 2.0) == pytest.approx(2 / (2 * math.pi))

    def test_c_constant_needs_positive_a0(self):
        with pytest.raises(DomainError):
            c_constant(0.0, 1.5)

    def test_logarithmic_constant(self):
        constants = RegimeConstants(2.0, StableCFParams(beta=1.0, a1=2.0))

        assert limit_constant(Regime.C2, constants) == pytest.approx(1 / (2 * math.pi))

    def test_d2_constant(self):
        constants = RegimeConstants(1.0, StableCFParams(beta=2.0, a1=0.5), a0=1.0)

        expected = 1 / (2 * 0.5 * c_constant(1.0, 2.0))
        assert limit_constant(Regime.D2, constants) == pytest.approx(expected)

    def test_d1_constant(self):
        params = StableCFParams(beta=1.5, a1=1.0)
        constants = RegimeConstants(1.0, params, a0=3 / math.pi)
        c = c_constant(3 / math.pi, 1.5)

        expected = gamma(0.5) / (math.pi * c * 0.5) * math.sin(0.75 * math.pi)
        assert limit_constant(Regime.D1, constants) == pytest.approx(expected)

    def test_power_law_constants_have_opposite_orientation(self):
        recurrent = RegimeConstants(2.0, StableCFParams(2.0, 1.0), l_moment=MOMENT)
        transient = RegimeConstants(2.0, StableCFParams(0.5, 1.0), l_moment=MOMENT)

        assert limit_constant(Regime.C1, recurrent) > 0
        assert limit_constant(Regime.C0, transient) > 0

    def test_psi_constant(self):
        constants = RegimeConstants(2.0, StableCFParams(2.0, 1.0), l_moment=MOMENT)

        assert psi_constant(constants) == pytest.approx(gamma(1 / 1.5) * 0.8 / 1.5)

    def test_regime_must_match(self):
        constants = RegimeConstants(2.0, StableCFParams(beta=1.0, a1=2.0))

        with pytest.raises(RegimeMismatch):
            limit_constant(Regime.C1, constants)

    def test_alpha_one_needs_a0(self):
        with pytest.raises(RegimeMismatch):
            limit_constant(Regime.D2, RegimeConstants(1.0, StableCFParams(2.0, 1.0)))


class TestFourierConstants:
    def test_symmetric_law_has_equal_constants(self):
        c_plus, c_minus = c_plus_minus(1.5, 0.5, StableCFParams(beta=0.5, a1=1.0))

        assert c_plus == pytest.approx(c_minus)

    def test_mirroring_swaps_the_constants(self):
        params = StableCFParams(beta=0.5, a1=1.0, a2=0.5)

        c_plus, c_minus = c_plus_minus(1.5, 0.5, params)

        swapped = c_plus_minus(1.5, 0.5, mirrored(params))
        assert swapped == pytest.approx((c_minus, c_plus))

    def test_needs_delta_above_one(self):
        with pytest.raises(DomainError):
            c_plus_minus(0.75, 2.0, StableCFParams(beta=2.0, a1=1.0))


class TestLMoment:
    def test_default_walks(self):
        assert default_walk(2.0).kind == WalkKind.SIMPLE_SYMMETRIC
        assert default_walk(1.5).tail_exponent == 2.5

    def test_estimate(self):
        estimate = l_moment_estimate(2.0, 0.5, 1024, 500, seed=3)

        assert estimate.value > 0
        assert 0 < estimate.stderr < estimate.value
        assert (estimate.n, estimate.reps) == (1024, 500)

    def test_cauchy_walk_has_no_moment(self):
        with pytest.raises(RegimeMismatch):
            l_moment_estimate(1.0, 1.5, 1024, 500, seed=3)

    def test_too_short(self):
        with pytest.raises(DomainError):
            l_moment_estimate(2.0, 2.0, 512, 500, seed=3)
