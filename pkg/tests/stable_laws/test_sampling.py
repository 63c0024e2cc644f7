import math

import numpy as np
import pytest

from src.rwrs.errors import InadmissibleParameters
from src.rwrs.stable_laws import StableCFParams
from src.rwrs.stable_laws.sampling import LatticeZipf, sample_stable
from src.rwrs.utilities.random import StreamPurpose, chunk_generator


def generator(seed: int = 1) -> np.random.Generator:
    return chunk_generator(seed, StreamPurpose.SAMPLER, 0)


class TestSampleStable:
    def test_same_generator_state_same_draws(self):
        params = StableCFParams(beta=1.3, a1=1.0, a2=0.4)

        first = sample_stable(params, generator(), size=1000)
        second = sample_stable(params, generator(), size=1000)

        assert np.array_equal(first, second)

    def test_scalar_draw(self):
        value = sample_stable(StableCFParams(beta=1.5, a1=1.0), generator())

        assert isinstance(value, float)

    def test_gaussian_variance_is_two_a1(self):
        draws = sample_stable(StableCFParams(beta=2.0, a1=1.0), generator(), size=10**5)

        assert np.var(draws) == pytest.approx(2.0, abs=0.05)

    def test_cauchy_quartiles(self):
        draws = sample_stable(StableCFParams(beta=1.0, a1=1.0), generator(), size=10**6)

        lower, upper = np.quantile(draws, [0.25, 0.75])
        assert lower == pytest.approx(-1.0, abs=0.01)
        assert upper == pytest.approx(1.0, abs=0.01)

    def test_tail_scales_like_a_power(self):
        beta = 0.7
        params = StableCFParams(beta=beta, a1=1.0)
        draws = sample_stable(params, generator(), size=2 * 10**5)

        for t in (1.0, 10.0, 100.0):
            scaled_tail = np.mean(np.abs(draws) >= t) * t**beta
            assert 0.2 <= scaled_tail <= 1.5


class TestLatticeZipf:
    def test_masses_sum_to_one(self):
        zipf = LatticeZipf(2.5)

        assert zipf.tail(1) == pytest.approx(1.0, abs=1e-12)
        assert 2 * zipf.point_mass(1) == pytest.approx(1 - zipf.tail(2), abs=1e-12)

    def test_never_zero(self):
        zipf = LatticeZipf(2.0)
        uniforms = generator().random((2, 10**4))

        values = zipf.from_uniforms(uniforms[0], uniforms[1])

        assert np.all(values != 0)
        assert values.dtype == np.int64

    def test_largest_magnitude_of_uniform(self):
        zipf = LatticeZipf(2.0)

        assert zipf.magnitude_from_uniform(np.array([1.0]))[0] == 1
        assert zipf.magnitude_from_uniform(np.array([zipf.tail(3)]))[0] == 3

    def test_deep_magnitudes_from_bisection(self):
        zipf = LatticeZipf(2.0)
        target = zipf.tail(10**6)

        assert zipf.magnitude_from_uniform(np.array([target]))[0] == 10**6

    def test_cauchy_limit(self):
        params = LatticeZipf(2.0).limit_params()

        assert params.beta == 1.0
        assert params.a1 == pytest.approx(3 / math.pi, rel=1e-6)

    def test_finite_variance_limit(self):
        params = LatticeZipf(4.0).limit_params()

        assert params.beta == 2.0
        assert params.a1 == pytest.approx(7.5 / math.pi**2, rel=1e-6)

    def test_boundary_exponent_is_rejected(self):
        with pytest.raises(InadmissibleParameters):
            LatticeZipf(3.0).limit_params()

    def test_cf_at_origin(self):
        assert LatticeZipf(2.5).cf(0.0)[0] == pytest.approx(1.0, abs=1e-4)
