"""
Quadrature checks of the closed forms behind the renewal constants.

`oscillatory_integral` evaluates `int_0^inf (1 - e^(-i t)) t^(-s) dt` both from its closed form
`Gamma(2 - s) / (s - 1) e^(i pi (s - 1) / 2)` and numerically. For `s < 1` the integral only
exists as an analytic continuation, `-int_0^inf e^(-i t) t^(-s) dt`, and that is what the
numerical side computes there. The oscillatory tail past `T = 2 pi m` is integrated by parts:

    int_T^inf e^(-i t) g(t) dt = e^(-i T) sum_{j < K} (-i)^(j+1) g^(j)(T) + R,
    |R| <= |g^(K-1)(T)|
"""
import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma

from . import c_plus_minus
from ..errors import DomainError, QuadratureFailure
from ..stable_laws import StableCFParams

PARTS = 3
QUAD_LIMIT = 2000


class KernelKind(Enum):
    DELTA = "delta"
    BETA = "beta"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OscillatoryIntegral:
    exponent: float
    closed_form: complex
    quadrature: complex
    error_estimate: float

    @property
    def disagreement(self) -> float:
        return abs(self.closed_form - self.quadrature)


def closed_form(exponent: float) -> complex:
    phase = cmath.exp(1j * math.pi * (exponent - 1) / 2)
    return gamma(2 - exponent) / (exponent - 1) * phase


def _derivative(exponent: float, order: int, t: float) -> float:
    """`d^order/dt^order t^(-exponent)`."""
    coefficient = math.prod(-exponent - j for j in range(order))
    return coefficient * t ** (-exponent - order)


def _tail(exponent: float, tolerance: float) -> tuple[complex, float]:
    """`int_1^inf e^(-i t) t^(-s) dt` with its error bound."""
    # the remainder of the expansion is |g''(T)| = s (s+1) T^(-s-2)
    reach = (exponent * (exponent + 1) / tolerance) ** (1 / (exponent + PARTS - 1))
    end = 2 * math.pi * max(1, math.ceil(reach / (2 * math.pi)))

    def power(t):
        return t ** (-exponent)

    options = {
        "wvar": 1.0,
        "limit": QUAD_LIMIT,
        "epsabs": tolerance / 10,
        "epsrel": 1e-10,
    }
    cosine, cosine_error = quad(power, 1, end, weight="cos", **options)
    sine, sine_error = quad(power, 1, end, weight="sin", **options)
    parts = cmath.exp(-1j * end) * sum(
        (-1j) ** (j + 1) * _derivative(exponent, j, end) for j in range(PARTS)
    )
    remainder = abs(_derivative(exponent, PARTS - 1, end))
    return complex(cosine, -sine) + parts, cosine_error + sine_error + remainder


def _quadrature(exponent: float, tolerance: float) -> tuple[complex, float]:
    tail, tail_error = _tail(exponent, tolerance)

    def weight(power: float) -> dict:
        return {
            "weight": "alg",
            "wvar": (power, 0.0),
            "epsabs": tolerance / 10,
            "epsrel": 1e-10,
        }

    if exponent < 1:
        real, real_error = quad(np.cos, 0, 1, **weight(-exponent))
        imag, imag_error = quad(lambda t: -np.sin(t), 0, 1, **weight(-exponent))
        head = complex(real, imag)
        return -(head + tail), real_error + imag_error + tail_error
    # (1 - cos t) / t^2 and sin t / t carry the singular powers t^(2-s) and t^(1-s)
    real, real_error = quad(
        lambda t: np.sinc(t / (2 * np.pi)) ** 2 / 2, 0, 1, **weight(2 - exponent)
    )
    imag, imag_error = quad(lambda t: np.sinc(t / np.pi), 0, 1, **weight(1 - exponent))
    head = complex(real, imag) + 1 / (exponent - 1)
    return head - tail, real_error + imag_error + tail_error


def oscillatory_integral(
    kind: KernelKind,
    parameter: float,
    tolerance: float = 1e-7,
    conjugate: bool = False,
) -> OscillatoryIntegral:
    """
    `kind = DELTA` uses the exponent `1/parameter`, `kind = BETA` the parameter itself. With
    `conjugate` the kernel is `1 - e^(+i t)` and both sides are conjugated. A disagreement above
    `tolerance` raises.
    """
    exponent = 1 / parameter if kind == KernelKind.DELTA else parameter
    if not 0 < exponent < 2 or exponent == 1:
        raise DomainError(
            "oscillatory_integral", f"exponent {exponent} not in (0, 1) or (1, 2)"
        )
    exact = closed_form(exponent)
    numeric, error = _quadrature(exponent, tolerance / 10)
    if conjugate:
        exact, numeric = exact.conjugate(), numeric.conjugate()
    result = OscillatoryIntegral(
        exponent=exponent, closed_form=exact, quadrature=numeric, error_estimate=error
    )
    if result.disagreement > tolerance:
        raise QuadratureFailure(
            f"int (1 - e^(-it)) t^(-{exponent}) dt", result.disagreement, tolerance
        )
    return result


def _half_line(function, singular_exponent: float) -> complex:
    """`int_0^inf function(x) x^singular_exponent dx` for smooth, rapidly decaying `function`."""
    weight = {"weight": "alg", "wvar": (singular_exponent, 0.0), "limit": QUAD_LIMIT}
    near_real, _ = quad(lambda x: function(x).real, 0, 1, **weight)
    near_imag, _ = quad(lambda x: function(x).imag, 0, 1, **weight)

    def far(x):
        return function(x) * x**singular_exponent

    far_real, _ = quad(lambda x: far(x).real, 1, np.inf, limit=QUAD_LIMIT)
    far_imag, _ = quad(lambda x: far(x).imag, 1, np.inf, limit=QUAD_LIMIT)
    return complex(near_real + far_real, near_imag + far_imag)


def fourier_identity_check(
    delta: float, beta: float, params: StableCFParams, shift: float = 0.7
) -> tuple[float, float]:
    """
    Both sides of `int g^(u) |u|^(-1/delta) (a1 + i a2 sgn u)^(-1/(delta beta)) du =
    int g(v) |v|^(1/delta - 1) (c+ 1(v > 0) + c- 1(v < 0)) dv` for the Gaussian
    `g(v) = exp(-(v - shift)^2 / 2)` with `g^(u) = sqrt(2 pi) exp(-u^2/2 + i u shift)`.
    """
    c_plus, c_minus = c_plus_minus(delta, beta, params)
    power = -1 / (delta * beta)
    rate = complex(params.a1, params.a2) ** power

    def transform(u):
        return math.sqrt(2 * math.pi) * np.exp(-u * u / 2 + 1j * u * shift)

    # the u < 0 half is the conjugate of the u > 0 half
    lhs = 2 * (rate * _half_line(transform, -1 / delta)).real
    right = _half_line(lambda v: np.exp(-((v - shift) ** 2) / 2) + 0j, 1 / delta - 1)
    left = _half_line(lambda v: np.exp(-((v + shift) ** 2) / 2) + 0j, 1 / delta - 1)
    rhs = c_plus * right.real + c_minus * left.real
    return float(lhs), float(rhs)
