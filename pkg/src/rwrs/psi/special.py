"""
Special functions of the `alpha = 1` analysis.

* `lambert_w`: inverse of `y e^y` on `[0, inf)`.
* `delta_inv`: inverse of `y -> e^y / y` on `[1, inf)`, defined on `[e, inf)`.
* `w_tilde`: derivative of the inverse of `v -> v log(v)^(beta - 1)` times `t^p`. It turns sums
  over `b_n^beta = n log(n)^(beta - 1)` into Laplace transforms.
"""
import math
from typing import Union

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma, lambertw

from ..errors import DomainError, QuadratureFailure
from ..regimes import delta_exponent

ArrayLike = Union[float, np.ndarray]

_SERIES_THRESHOLD = 1e-3
_NEWTON_FLOOR = 1e-10
_SUM_BLOCK = 1 << 20


def _scalar_or_array(values: np.ndarray, like) -> ArrayLike:
    return float(values) if np.ndim(like) == 0 else values


def lambert_w(x: ArrayLike) -> ArrayLike:
    """Principal branch, polished by one Newton step on `w e^w - x`."""
    values = np.asarray(x, dtype=np.float64)
    if np.any(values < 0):
        raise DomainError("lambert_w", "argument must be non-negative")
    w = lambertw(values).real
    step = (w * np.exp(w) - values) / (np.exp(w) * (w + 1))
    return _scalar_or_array(w - np.where(values > 0, step, 0.0), x)


def delta_inv(x: ArrayLike) -> ArrayLike:
    """
    `Delta(x) >= 1` with `e^Delta / Delta = x`. Near the branch point `x = e` the value comes
    from the series `1 + sqrt(2 r) + 2 r / 3 + sqrt(2) r^(3/2) / 18` in `r = log(x) - 1`,
    elsewhere from the `-1` branch of Lambert W; both are polished by Newton steps.
    """
    values = np.asarray(x, dtype=np.float64)
    if np.any(values < math.e):
        raise DomainError("delta_inv", "argument must be at least e")
    excess = np.maximum(np.log(values) - 1, 0.0)
    root = np.sqrt(excess)
    series = (
        1 + math.sqrt(2) * root + 2 * excess / 3 + math.sqrt(2) * excess * root / 18
    )
    with np.errstate(invalid="ignore"):
        branch = -lambertw(-1 / values, -1).real
    y = np.where(excess < _SERIES_THRESHOLD, series, branch)
    for _ in range(3):
        newton = (y - 1 - np.log(y) - excess) * y / np.where(y > 1, y - 1, 1.0)
        y = np.where(excess > _NEWTON_FLOOR, y - newton, y)
    return _scalar_or_array(y, x)


def w_tilde_support(beta: float) -> float:
    """Left end of the support of `w_tilde`: 0 if `beta > 1`, else `(e / (1 - beta))^(1 - beta)`."""
    if beta == 1:
        raise DomainError("w_tilde", "beta = 1 has no log correction")
    return 0.0 if beta > 1 else (math.e / (1 - beta)) ** (1 - beta)


def w_tilde(p: float, beta: float, t: ArrayLike) -> ArrayLike:
    """`w~_p(t) = w~_0(t) t^p`; zero left of the support."""
    if p < 0:
        raise DomainError("w_tilde", f"p = {p} must be non-negative")
    points = np.asarray(t, dtype=np.float64)
    start = w_tilde_support(beta)
    if beta > 1:
        argument = np.maximum(points, 0.0) ** (1 / (beta - 1)) / (beta - 1)
        w = np.asarray(lambert_w(argument))
        base = (beta - 1) ** (1 - beta) * w ** (2 - beta) / (1 + w)
        inside = points >= 0
    else:
        inside = points > start
        clipped = np.where(inside, points, start * 2)
        argument = np.maximum((1 - beta) * clipped ** (1 / (1 - beta)), math.e)
        delta = np.asarray(delta_inv(argument))
        base = delta ** (2 - beta) * (1 - beta) ** (1 - beta) / (delta - 1)
    values = np.where(inside, base * np.where(inside, points, 1.0) ** p, 0.0)
    return _scalar_or_array(values, t)


def _quad_complex(
    function, lower: float, upper: float, relative: float
) -> tuple[complex, float]:
    options = {"limit": 200, "epsabs": 0.0, "epsrel": relative}
    real, real_error = quad(lambda s: function(s).real, lower, upper, **options)
    imag, imag_error = quad(lambda s: function(s).imag, lower, upper, **options)
    return complex(real, imag), real_error + imag_error


def laplace_w_tilde(
    p: float, beta: float, z: complex, tolerance: float = 1e-8
) -> complex:
    """
    `int_0^inf e^(-z t) w~_p(t) dt` for `Re z > 0`. The singular stretch right of the support
    is integrated in `t`, the rest after rescaling `s = Re(z) t`.
    """
    z = complex(z)
    if z.real <= 0:
        raise DomainError("laplace_w_tilde", f"Re z = {z.real} must be positive")
    start = w_tilde_support(beta)
    near, near_error = _quad_complex(
        lambda t: np.exp(-z * t) * w_tilde(p, beta, t), start, start + 1, tolerance / 10
    )
    scale = z.real
    direction = z / scale
    far_start = scale * (start + 1)

    def rescaled(s: float) -> complex:
        return np.exp(-direction * s) * w_tilde(p, beta, s / scale) / scale

    far = 0j
    far_error = 0.0
    middle = max(far_start, 1.0)
    for lower, upper in ((far_start, middle), (middle, np.inf)):
        if upper > lower:
            piece, error = _quad_complex(rescaled, lower, upper, tolerance / 10)
            far += piece
            far_error += error
    value = near + far
    error = near_error + far_error
    if error > tolerance * max(abs(value), 1e-300):
        raise QuadratureFailure(
            f"Laplace transform of w~_{p} (beta={beta}) at z={z}",
            error / max(abs(value), 1e-300),
            tolerance,
        )
    return value


def tauberian_ratio(p: float, beta: float, u: float) -> float:
    """`u^(p+1) L(w~_p)(u) / (Gamma(p+1) (-log u)^(1-beta))`, tending to 1 as `u` decreases."""
    if not 0 < u < 1:
        raise DomainError("tauberian_ratio", f"u = {u} must lie in (0, 1)")
    transform = laplace_w_tilde(p, beta, u).real
    normalization = gamma(p + 1) * (-math.log(u)) ** (1 - beta)
    return float(u ** (p + 1) * transform / normalization)


def _lattice_sum(exponent_of, z: complex, p: float, first: int) -> complex:
    """`sum_{n >= first} e^(-z x_n) x_n^p` with `x_n = exponent_of(n)` increasing."""
    total = 0j
    start = first
    while True:
        n = np.arange(start, start + _SUM_BLOCK, dtype=np.float64)
        x = exponent_of(n)
        total += np.sum(np.exp(-z * x) * x**p)
        if z.real * x[-1] > 60 + p * math.log(max(x[-1], 1.0)):
            return total
        start += _SUM_BLOCK


def lattice_sum_gap(
    p: float, alpha: float, beta: float, z: complex, u: float
) -> complex:
    """
    `sum_n e^(-z u^(delta beta) b_n^beta) (u^(delta beta) b_n^beta)^p` minus its integral
    surrogate: the Gamma integral for `alpha > 1`, `u^p L(w~_p)(z u)` for `alpha = 1`.
    The gap stays bounded while both terms grow like `1/u`.
    """
    z = complex(z)
    if z.real <= 0 or u <= 0:
        raise DomainError("lattice_sum_gap", "needs Re z > 0 and u > 0")
    q = delta_exponent(alpha, beta) * beta
    if alpha > 1:
        scale = u**q
        total = _lattice_sum(lambda n: scale * n**q, z, p, 1)
        surrogate = scale ** (-1 / q) * gamma(p + 1 / q) * z ** (-(p + 1 / q)) / q
        return complex(total - surrogate)
    first = 1 if beta > 1 else 3
    total = _lattice_sum(lambda n: u * n * np.log(n) ** (beta - 1), z, p, first)
    surrogate = u**p * laplace_w_tilde(p, beta, z * u)
    return complex(total - surrogate)

