"""
## Renewal kernels

    K_{n,a}(h) = sum_{k <= n} (E[h(Z_k)] - E[h(Z_k - a)])

in the recurrent regimes and `sum_n E[h(Z_n - a)]` in the transient one. Fourier transforms
follow `h^(t) = int h(x) e^(-i t x) dx` (a sum over the integers for lattice functions), so that

    K_{n,a}(h) = 1/(2 pi) int h^(t) (sum_{k <= n} E[e^(i t Z_k)]) (1 - e^(-i t a)) dt.

The estimators live in `direct` (paired Monte Carlo along each path), `fourier` (quadrature of
the representation above) and `fit` (the renewal asymptotics in `a`).
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from ..errors import DomainError
from ..regimes import Regime

SQRT_2PI = math.sqrt(2 * math.pi)


class Domain(Enum):
    LATTICE = "lattice"
    CONTINUUM = "continuum"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TestFunction:
    __test__ = False

    name: str
    h: Callable[[np.ndarray], np.ndarray]
    hat_h: Callable[[np.ndarray], np.ndarray]
    integral: float
    domain: Domain
    hat_h_prime: Optional[Callable[[np.ndarray], np.ndarray]] = None
    even: bool = True
    hat_cutoff: Optional[float] = None
    """`|t|` beyond which `h^` is below double precision, when it decays that fast."""

    def __post_init__(self):
        if complex(self.hat_h(np.float64(0.0))) != self.integral:
            raise DomainError(
                f"TestFunction {self.name}",
                f"h^(0) differs from I[h] = {self.integral}",
            )

    @property
    def lattice(self) -> bool:
        return self.domain == Domain.LATTICE

    @property
    def in_h1(self) -> bool:
        return self.domain == Domain.CONTINUUM and self.hat_h_prime is not None

    def reflected(self) -> "TestFunction":
        """`x -> h(-x)`, whose transform is `t -> h^(-t)`."""
        prime = self.hat_h_prime
        return TestFunction(
            name=f"{self.name}(-x)",
            h=lambda x: self.h(-np.asarray(x)),
            hat_h=lambda t: self.hat_h(-np.asarray(t)),
            integral=self.integral,
            domain=self.domain,
            hat_h_prime=None if prime is None else lambda t: -prime(-np.asarray(t)),
            even=self.even,
            hat_cutoff=self.hat_cutoff,
        )


DIRAC_AT_ZERO = TestFunction(
    name="dirac",
    h=lambda x: np.where(np.asarray(x) == 0, 1.0, 0.0),
    hat_h=lambda t: np.ones_like(np.asarray(t, dtype=np.float64)),
    integral=1.0,
    domain=Domain.LATTICE,
)

TRIANGLE = TestFunction(
    name="triangle",
    h=lambda x: np.maximum(0.0, 1 - np.abs(x)),
    hat_h=lambda t: np.sinc(np.asarray(t) / (2 * np.pi)) ** 2,
    integral=1.0,
    domain=Domain.CONTINUUM,
)

GAUSSIAN = TestFunction(
    name="gaussian",
    h=lambda x: np.exp(-np.square(x) / 2),
    hat_h=lambda t: SQRT_2PI * np.exp(-np.square(t) / 2),
    integral=SQRT_2PI,
    domain=Domain.CONTINUUM,
    hat_h_prime=lambda t: -SQRT_2PI * np.asarray(t) * np.exp(-np.square(t) / 2),
    hat_cutoff=9.0,
)

CATALOG = {function.name: function for function in (DIRAC_AT_ZERO, TRIANGLE, GAUSSIAN)}


def catalog_function(name: str) -> TestFunction:
    if name not in CATALOG:
        raise DomainError("catalog_function", f"unknown test function '{name}'")
    return CATALOG[name]


@dataclass(frozen=True)
class KernelEstimate:
    """
    `trunc_error` is the error of the `n`-sum (transient kernel) or of the `t`-quadrature
    (Fourier estimator); the direct estimate of `K_{n,a}` has none. `doubling_change` is
    `|K_{n,a} - K_{n/2,a}|` from the same paths, the diagnostic for the limit in `n`.
    """

    value: complex
    stat_error: float
    trunc_error: float
    a: float
    n: int
    regime: Optional[Regime]
    doubling_change: float = 0.0
    panels: Optional[int] = None

    @property
    def total_error(self) -> float:
        return self.stat_error + self.trunc_error
