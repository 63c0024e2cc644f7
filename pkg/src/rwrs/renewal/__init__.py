"""
## Renewal constants

Everything the renewal limits are compared against: the exponent `delta`, the scale `c` of
the `alpha = 1` normalization, the moment `E[|L|_beta^(-1/delta)]` (estimated from lattice
local times), the constant `C` of `gamma`, the theorem constants `C_0, C_1, C_2, D_1, D_2` and the
Fourier constants `c+-`.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

from scipy.special import gamma

from ..errors import DomainError, RegimeMismatch
from ..regimes import Regime, classify, delta_exponent
from ..stable_laws import StableCFParams
from ..walk_paths import WalkModel
from ..walk_paths.normalization import normalized_v_sample

MIN_L_MOMENT_STEPS = 1 << 10
MIN_L_MOMENT_REPLICAS = 500

__all__ = [
    "LMomentEstimate",
    "RegimeConstants",
    "c_constant",
    "c_plus_minus",
    "default_walk",
    "delta_exponent",
    "l_moment_estimate",
    "limit_constant",
    "mirrored",
    "power_law_constant",
    "psi_constant",
]


@dataclass(frozen=True)
class LMomentEstimate:
    value: float
    stderr: float
    n: int
    reps: int


@dataclass(frozen=True)
class RegimeConstants:
    alpha: float
    params: StableCFParams
    l_moment: Optional[LMomentEstimate] = None
    a0: Optional[float] = None

    def __post_init__(self):
        classify(self.alpha, self.beta)
        if self.l_moment is not None and not self.l_moment.value > 0:
            raise DomainError("RegimeConstants", "E[|L|^(-1/delta)] must be positive")
        if self.a0 is not None and not self.a0 > 0:
            raise DomainError("RegimeConstants", f"a0 = {self.a0} must be positive")

    @property
    def beta(self) -> float:
        return self.params.beta

    @property
    def delta(self) -> float:
        return delta_exponent(self.alpha, self.beta)

    @property
    def regime(self) -> Regime:
        return classify(self.alpha, self.beta)

    @property
    def c(self) -> Optional[float]:
        return None if self.a0 is None else c_constant(self.a0, self.beta)


def c_constant(a0: float, beta: float) -> float:
    """`(pi a0)^(1 - beta) Gamma(beta + 1)`."""
    if a0 <= 0:
        raise DomainError("c_constant", f"a0 = {a0} must be positive")
    return float((math.pi * a0) ** (1 - beta) * gamma(beta + 1))


def psi_constant(constants: RegimeConstants) -> float:
    """`C = Gamma(1/(delta beta)) E[|L|_beta^(-1/delta)] / (delta beta)`."""
    if constants.alpha == 1 or constants.l_moment is None:
        raise RegimeMismatch(
            constants.alpha, constants.beta, "C needs alpha > 1 and E[|L|^(-1/delta)]"
        )
    product = constants.delta * constants.beta
    return float(gamma(1 / product) * constants.l_moment.value / product)


def mirrored(params: StableCFParams) -> StableCFParams:
    """Parameters of `-xi`; the constants for `a -> -inf` are those of the mirrored law."""
    return params.mirrored()


def default_walk(alpha: float) -> WalkModel:
    """Simple walk for `alpha = 2`, lattice Zipf walk with tail exponent `alpha + 1` else."""
    return WalkModel.simple() if alpha == 2 else WalkModel.lattice_zipf(alpha + 1)


def l_moment_estimate(
    alpha: float,
    beta: float,
    n: int,
    reps: int,
    seed: int,
    walk: Optional[WalkModel] = None,
    number_of_threads: int = 1,
) -> LMomentEstimate:
    """Mean of `(b_n / V_n^(1/beta))^(1/delta)` over walks, the lattice version of the moment."""
    if alpha <= 1:
        raise RegimeMismatch(alpha, beta, "E[|L|^(-1/delta)] is used for alpha > 1")
    if n < MIN_L_MOMENT_STEPS or reps < MIN_L_MOMENT_REPLICAS:
        raise DomainError(
            "l_moment_estimate",
            f"needs n >= {MIN_L_MOMENT_STEPS} and reps >= {MIN_L_MOMENT_REPLICAS}",
        )
    model = walk or default_walk(alpha)
    if model.alpha != alpha:
        raise RegimeMismatch(model.alpha, beta, f"walk does not have index {alpha}")
    power = 1 / delta_exponent(alpha, beta)
    moments = normalized_v_sample(
        model, beta, n, reps, seed, power=power, number_of_threads=number_of_threads
    )
    estimate = LMomentEstimate(
        value=moments.mean.real, stderr=moments.stderr_real, n=n, reps=reps
    )
    logging.getLogger(__name__).info(
        f"E[|L|_{beta}^(-1/delta)] ~ {estimate.value:.6g} +- {estimate.stderr:.2g} "
        f"(n={n}, reps={reps})"
    )
    return estimate


def power_law_constant(constants: RegimeConstants, transient: bool) -> float:
    """
    The common form of `C_1` (`transient=False`, factor `1 - delta`) and `C_0` (factor
    `delta - 1`), evaluated without checking the regime.
    """
    if constants.l_moment is None:
        raise RegimeMismatch(
            constants.alpha, constants.beta, "the constant needs E[|L|^(-1/delta)]"
        )
    delta, beta, params = constants.delta, constants.beta, constants.params
    product = delta * beta
    orientation = delta - 1 if transient else 1 - delta
    numerator = gamma(1 / product) * gamma(2 - 1 / delta) * constants.l_moment.value
    denominator = math.pi * beta * orientation * params.modulus ** (1 / product)
    phase = math.sin((math.pi / 2 - params.angle / beta) / delta)
    return float(numerator / denominator * phase)


def limit_constant(regime: Regime, constants: RegimeConstants) -> float:
    """The constant of the renewal limit of `regime`."""
    if constants.regime != regime:
        raise RegimeMismatch(
            constants.alpha, constants.beta, f"indices belong to {constants.regime}"
        )
    params = constants.params
    if regime == Regime.C2:
        return 1 / (math.pi * params.a1)
    if regime in (Regime.C1, Regime.C0):
        return power_law_constant(constants, transient=regime == Regime.C0)
    c = constants.c
    if c is None:
        raise RegimeMismatch(constants.alpha, constants.beta, f"{regime} needs a0")
    if regime == Regime.D2:
        return 1 / (2 * params.a1 * c)
    beta = constants.beta
    phase = math.sin(math.pi * beta / 2 - params.angle)
    scale = math.pi * c * (beta - 1) * params.modulus
    return float(gamma(2 - beta) / scale * phase)


def c_plus_minus(
    delta: float, beta: float, params: StableCFParams
) -> tuple[float, float]:
    """
    `(c+, c-)`: the Fourier transform of `|u|^(-1/delta) (a1 + i a2 sgn u)^(-1/(delta beta))`
    is `|v|^(1/delta - 1)` times `c+` for `v > 0` and `c-` for `v < 0`.
    """
    if delta <= 1:
        raise DomainError("c_plus_minus", f"delta = {delta} must exceed 1")
    if params.beta != beta:
        raise DomainError("c_plus_minus", f"params have beta = {params.beta}")
    prefactor = 2 * gamma(1 - 1 / delta) / params.modulus ** (1 / (delta * beta))
    shift = params.angle / beta
    return (
        float(prefactor * math.sin((math.pi / 2 + shift) / delta)),
        float(prefactor * math.sin((math.pi / 2 - shift) / delta)),
    )

