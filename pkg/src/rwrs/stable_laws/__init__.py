"""
## Stable laws

The scenery's limit law is written through its characteristic function

    phi(u) = exp(-|u|^beta (a1 + i a2 sgn(u)))

with `0 < a1` and `|a2 / a1| <= |tan(pi beta / 2)|` (and `a2 = 0` when `beta = 1`).
`StableCFParams` holds `(beta, a1, a2)` and refuses inadmissible combinations at
construction. Samplers work in the `(index, skew, scale)` parametrization; the bridge is
`to_cms_parameters`.
"""
import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from ..errors import InadmissibleParameters

_ADMISSIBILITY_SLACK = 1e-12


@dataclass(frozen=True)
class StableCFParams:
    beta: float
    a1: float
    a2: float = 0.0

    def __post_init__(self):
        if not 0 < self.beta <= 2:
            raise InadmissibleParameters(
                self.beta, self.a1, self.a2, "beta must lie in (0, 2]"
            )
        if not 0 < self.a1 < math.inf:
            raise InadmissibleParameters(
                self.beta, self.a1, self.a2, "a1 must be positive and finite"
            )
        if self.beta == 1 and self.a2 != 0:
            raise InadmissibleParameters(
                self.beta, self.a1, self.a2, "a2 must vanish when beta = 1"
            )
        if abs(self.a2) > self.a1 * (self.skew_limit + _ADMISSIBILITY_SLACK):
            raise InadmissibleParameters(
                self.beta,
                self.a1,
                self.a2,
                f"|a2/a1| exceeds |tan(pi beta/2)| = {self.skew_limit:.6g}",
            )

    @property
    def skew_limit(self) -> float:
        """`|tan(pi beta / 2)|`, exactly 0 at beta = 2."""
        if self.beta == 2:
            return 0.0
        return abs(math.tan(math.pi * self.beta / 2))

    @property
    def modulus(self) -> float:
        return math.hypot(self.a1, self.a2)

    @property
    def angle(self) -> float:
        """`arctan(a2 / a1)`."""
        return math.atan(self.a2 / self.a1)

    def rate(self, sign: float) -> complex:
        """`a1 + i a2 sgn`, the complex rate seen by a Fourier variable of sign `sign`."""
        return complex(self.a1, self.a2 * np.sign(sign))

    def mirrored(self) -> "StableCFParams":
        """Law of `-xi`: the skew component changes sign."""
        return replace(self, a2=-self.a2)


@dataclass(frozen=True)
class CmsParameters:
    index: float
    skew: float
    scale: float


def cf_value(params: StableCFParams, u: Union[float, np.ndarray]):
    """`exp(-|u|^beta (a1 + i a2 sgn u))`; vectorised over `u`."""
    u = np.asarray(u, dtype=np.float64)
    exponent = np.abs(u) ** params.beta * (params.a1 + 1j * params.a2 * np.sign(u))
    value = np.exp(-exponent)
    return complex(value) if value.ndim == 0 else value


def log_cf_value(params: StableCFParams, u: Union[float, np.ndarray]):
    u = np.asarray(u, dtype=np.float64)
    return -(np.abs(u) ** params.beta) * (params.a1 + 1j * params.a2 * np.sign(u))


def to_cms_parameters(params: StableCFParams) -> CmsParameters:
    beta = params.beta
    if beta == 1 and params.a2 != 0:
        raise InadmissibleParameters(beta, params.a1, params.a2, "a2 must vanish")
    if beta in (1, 2):
        skew = 0.0
    else:
        skew = -params.a2 / (params.a1 * math.tan(math.pi * beta / 2))
    if abs(skew) > 1 + _ADMISSIBILITY_SLACK:
        raise InadmissibleParameters(
            beta, params.a1, params.a2, f"skew {skew:.6g} outside [-1, 1]"
        )
    return CmsParameters(
        index=beta,
        skew=float(np.clip(skew, -1.0, 1.0)),
        scale=params.a1 ** (1 / beta),
    )
