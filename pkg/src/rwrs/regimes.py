"""
## Regimes

The pair `(alpha, beta)` of walk and scenery indices fixes the scaling exponent
`delta = 1 - 1/alpha + 1/(alpha beta)` and the renewal statement that applies:

| regime | indices                 | kernel                     | constant |
|--------|-------------------------|----------------------------|----------|
| `C1`   | `alpha > 1`, `beta > 1` | recurrent, power law       | `C_1`    |
| `C2`   | `beta = 1`              | recurrent, logarithmic     | `C_2`    |
| `D1`   | `alpha = 1`, `1 < beta < 2` | recurrent, log-power   | `D_1`    |
| `D2`   | `alpha = 1`, `beta = 2` | recurrent, `log(a^2)/a`    | `D_2`    |
| `C0`   | `alpha > 1`, `beta < 1` | transient                  | `C_0`    |

`alpha = 1` with `beta < 1` is not covered and is rejected.
"""
from enum import Enum

from .errors import RegimeMismatch


class Regime(Enum):
    C1 = "C1"
    C2 = "C2"
    D1 = "D1"
    D2 = "D2"
    C0 = "C0"

    def __str__(self):
        return self.value

    @property
    def transient(self) -> bool:
        return self == Regime.C0


def delta_exponent(alpha: float, beta: float) -> float:
    if not 1 <= alpha <= 2 or not 0 < beta <= 2:
        raise RegimeMismatch(
            alpha, beta, "indices outside alpha in [1, 2], beta in (0, 2]"
        )
    return 1 - 1 / alpha + 1 / (alpha * beta)


def classify(alpha: float, beta: float) -> Regime:
    delta_exponent(alpha, beta)
    if beta == 1:
        return Regime.C2
    if alpha > 1:
        return Regime.C1 if beta > 1 else Regime.C0
    if beta < 1:
        raise RegimeMismatch(alpha, beta, "alpha = 1 with beta < 1 is not covered")
    return Regime.D2 if beta == 2 else Regime.D1
