"""Conditional characteristic functions of `Z_k` given whole batches of walk paths."""
import numpy as np

from ..stable_laws.scenery import SceneryLaw
from ..walk_paths.simulation import PathBatch


def _on_counts(function, t: float, counts: np.ndarray) -> np.ndarray:
    """Evaluates `function(t * count)` once per distinct count."""
    distinct, inverse = np.unique(counts, return_inverse=True)
    values = np.asarray(function(t * distinct.astype(np.float64)), dtype=np.complex128)
    return values[inverse].reshape(counts.shape)


def conditional_cf_batch(batch: PathBatch, law: SceneryLaw, t: float) -> np.ndarray:
    """`prod_y phi(t N_n(y))` for every replica of the batch."""
    _, _, counts = batch.site_runs
    factors = _on_counts(law.cf, t, counts)
    return np.multiply.reduceat(factors, batch.replica_run_starts)


def prefix_cf(batch: PathBatch, law: SceneryLaw, t: float) -> np.ndarray:
    """
    `E[exp(i t Z_k) | S]` for `k = 1..n` on every replica. Step `k` multiplies the running
    product by `phi(t (c + 1)) / phi(t c)` where `c` counts earlier visits of `S_k`. The
    product is carried in logs; factors that vanish exactly are counted separately.
    """
    visits = batch.prior_visits
    if law.has_log_cf:
        increments = _on_counts(law.log_cf, t, visits + 1) - _on_counts(
            law.log_cf, t, visits
        )
        return np.exp(np.cumsum(increments, axis=1))

    entering = _on_counts(law.cf, t, visits + 1)
    leaving = _on_counts(law.cf, t, visits)
    entering_zero = entering == 0
    leaving_zero = leaving == 0
    increments = np.log(np.where(entering_zero, 1, entering)) - np.log(
        np.where(leaving_zero, 1, leaving)
    )
    zeros = np.cumsum(entering_zero.astype(np.int64) - leaving_zero, axis=1)
    return np.where(zeros > 0, 0j, np.exp(np.cumsum(increments, axis=1)))


def scenery_along(batch: PathBatch, scenery, first_replica: int) -> np.ndarray:
    """`xi_{S_k}` for every replica and step; replica `r` of the batch uses scenery `first + r`."""
    replicas = first_replica + np.arange(batch.replicas)[:, None]
    return scenery.values(replicas, batch.positions)


def z_prefix(batch: PathBatch, scenery, first_replica: int) -> np.ndarray:
    """`Z_1..Z_n` as running sums along every path."""
    return np.cumsum(scenery_along(batch, scenery, first_replica), axis=1)
