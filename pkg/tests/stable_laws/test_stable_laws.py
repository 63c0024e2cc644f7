import math

import numpy as np
import pytest

from src.rwrs.errors import InadmissibleParameters
from src.rwrs.stable_laws import (
    StableCFParams,
    cf_value,
    log_cf_value,
    to_cms_parameters,
)


class TestStableCFParams:
    def test_gaussian_cf(self):
        assert cf_value(StableCFParams(beta=2.0, a1=1.0), 1.0) == pytest.approx(
            math.exp(-1), abs=1e-15
        )

    def test_cf_at_origin_is_one(self):
        params = StableCFParams(beta=1.5, a1=1.0, a2=0.5)

        assert cf_value(params, 0.0) == 1

    def test_hermitian_symmetry(self):
        params = StableCFParams(beta=1.5, a1=1.0, a2=0.5)
        u = np.array([0.3, 1.0, 2.0])

        mirrored = np.conj(cf_value(params, u))
        assert np.allclose(cf_value(params, -u), mirrored, atol=1e-15)

    def test_log_cf_matches_cf(self):
        params = StableCFParams(beta=0.7, a1=2.0, a2=-1.0)
        u = np.linspace(-3, 3, 13)

        assert np.allclose(np.exp(log_cf_value(params, u)), cf_value(params, u))

    def test_skew_bound_is_admissible(self):
        params = StableCFParams(beta=0.5, a1=1.0, a2=1.0)

        assert params.skew_limit == pytest.approx(1.0)

    @pytest.mark.parametrize(
        "beta, a1, a2",
        [
            (1.5, 0.0, 0.0),
            (1.5, -1.0, 0.0),
            (1.0, 1.0, 0.1),
            (0.5, 1.0, 1.5),
            (2.0, 1.0, 0.1),
        ],
    )
    def test_inadmissible(self, beta, a1, a2):
        with pytest.raises(InadmissibleParameters):
            StableCFParams(beta=beta, a1=a1, a2=a2)

    def test_mirrored_flips_skew(self):
        params = StableCFParams(beta=1.5, a1=1.0, a2=0.5)

        assert params.mirrored() == StableCFParams(beta=1.5, a1=1.0, a2=-0.5)
        assert params.rate(-1.0) == complex(1.0, -0.5)


class TestCmsParameters:
    def test_totally_skewed(self):
        cms = to_cms_parameters(StableCFParams(beta=0.5, a1=1.0, a2=1.0))

        assert cms.index == 0.5
        assert cms.skew == pytest.approx(-1.0, abs=1e-12)
        assert cms.scale == pytest.approx(1.0)

    def test_cauchy(self):
        cms = to_cms_parameters(StableCFParams(beta=1.0, a1=3.0))

        assert (cms.index, cms.skew, cms.scale) == (1.0, 0.0, 3.0)

    def test_scale_is_a1_to_one_over_beta(self):
        cms = to_cms_parameters(StableCFParams(beta=1.5, a1=8.0))

        assert cms.scale == pytest.approx(4.0)
        assert cms.skew == 0.0
