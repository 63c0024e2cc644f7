import math

import numpy as np
import pytest

from src.rwrs.errors import DomainError
from src.rwrs.kernels import (
    CATALOG,
    DIRAC_AT_ZERO,
    GAUSSIAN,
    SQRT_2PI,
    Domain,
    KernelEstimate,
    TestFunction,
    catalog_function,
)


def shifted_gaussian() -> TestFunction:
    return TestFunction(
        name="shifted",
        h=lambda x: np.exp(-np.square(np.asarray(x) - 1) / 2),
        hat_h=lambda t: SQRT_2PI
        * np.exp(-np.square(t) / 2)
        * np.exp(-1j * np.asarray(t)),
        integral=SQRT_2PI,
        domain=Domain.CONTINUUM,
        even=False,
    )


class TestCatalog:
    @pytest.mark.parametrize("name", sorted(CATALOG))
    def test_transform_at_origin_is_the_integral(self, name):
        function = catalog_function(name)

        assert complex(function.hat_h(np.float64(0.0))) == function.integral

    def test_unknown_function(self):
        with pytest.raises(DomainError) as exc_info:
            catalog_function("boxcar")
        assert "unknown test function 'boxcar'" in exc_info.value.message

    def test_domains(self):
        assert DIRAC_AT_ZERO.lattice
        assert not DIRAC_AT_ZERO.in_h1
        assert GAUSSIAN.in_h1
        assert not catalog_function("triangle").in_h1

    def test_inconsistent_integral(self):
        with pytest.raises(DomainError):
            TestFunction(
                name="wrong",
                h=GAUSSIAN.h,
                hat_h=GAUSSIAN.hat_h,
                integral=1.0,
                domain=Domain.CONTINUUM,
            )

    def test_reflection(self):
        function = shifted_gaussian()
        reflected = function.reflected()

        assert reflected.h(-1.0) == pytest.approx(1.0)
        assert reflected.hat_h(0.5) == pytest.approx(function.hat_h(-0.5))
        assert not reflected.even

    def test_gaussian_values(self):
        assert GAUSSIAN.h(0.0) == 1.0
        assert GAUSSIAN.hat_h(1.0) == pytest.approx(SQRT_2PI * math.exp(-0.5))


class TestKernelEstimate:
    def test_total_error(self):
        estimate = KernelEstimate(
            value=1.0, stat_error=0.1, trunc_error=0.05, a=2.0, n=10, regime=None
        )

        assert estimate.total_error == pytest.approx(0.15)
