import math

import pytest

from src.rwrs.errors import DomainError, FitError
from src.rwrs.walk_paths import WalkModel
from src.rwrs.walk_paths.normalization import b_norm, estimate_a0, normalized_v_sample


class TestBNorm:
    def test_power_normalization(self):
        assert b_norm(2, 2, 16) == pytest.approx(8.0)
        assert b_norm(2, 0.5, 4) == pytest.approx(4**1.5)

    def test_logarithmic_normalization(self):
        assert b_norm(1, 2, 100) == pytest.approx(21.4597, abs=1e-4)
        assert b_norm(1, 1, 100) == pytest.approx(100.0)

    def test_alpha_one_needs_two_steps(self):
        with pytest.raises(DomainError):
            b_norm(1, 1.5, 1)


class TestNormalizedV:
    def test_stable_in_n(self):
        walk = WalkModel.simple()
        short = normalized_v_sample(walk, 2.0, 1 << 12, 2000, seed=1)
        long = normalized_v_sample(walk, 2.0, 1 << 14, 2000, seed=2)

        combined = math.hypot(short.stderr_real, long.stderr_real)
        assert abs(short.mean.real - long.mean.real) <= 3 * combined

    def test_thread_count_does_not_matter(self):
        walk = WalkModel.simple()
        single = normalized_v_sample(walk, 1.5, 256, 1200, seed=9)
        threaded = normalized_v_sample(
            walk, 1.5, 256, 1200, seed=9, number_of_threads=3
        )

        assert single == threaded

    def test_power(self):
        walk = WalkModel.simple()
        plain = normalized_v_sample(walk, 2.0, 64, 100, seed=3)
        squared = normalized_v_sample(walk, 2.0, 64, 100, seed=3, power=-2.0)

        assert squared.mean.real >= plain.mean.real**2 * (1 - 1e-12)


class TestEstimateA0:
    def test_cauchy_walk(self):
        estimate = estimate_a0(WalkModel.lattice_zipf(2.0), 1000, 20000, seed=5)

        assert estimate.value == pytest.approx(3 / math.pi, rel=0.05)
        assert 0 < estimate.stderr < 0.05
        assert estimate.residual <= 0.1

    def test_simple_walk_is_not_cauchy(self):
        with pytest.raises(FitError) as exc_info:
            estimate_a0(WalkModel.simple(), 100, 2000, seed=5)
        assert "does not look Cauchy-like" in exc_info.value.message

    def test_deterministic(self):
        walk = WalkModel.lattice_zipf(2.0)

        first = estimate_a0(walk, 50, 1000, seed=8, residual_threshold=1.0)
        second = estimate_a0(
            walk, 50, 1000, seed=8, residual_threshold=1.0, number_of_threads=2
        )

        assert first == second
