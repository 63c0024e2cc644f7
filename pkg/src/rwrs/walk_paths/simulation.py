"""
Path simulation. `simulate_local_times` walks one path step by step and fills a
`LocalTimeTable`; `PathBatch` holds a block of paths as arrays and derives the same
local-time statistics for all of them at once, including every prefix `1..k`.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from . import LocalTimeTable, WalkModel
from ..errors import DomainError


def simulate_local_times(
    model: WalkModel,
    n: int,
    rng: Optional[np.random.Generator] = None,
    forced_steps: Optional[Sequence[int]] = None,
    betas: Sequence[float] = (),
) -> LocalTimeTable:
    """
    Walks `n` steps from the origin. `forced_steps` replaces the sampled increments, which
    makes hand-traced paths reproducible; `betas` are tracked incrementally in `running_v`.
    """
    if n < 1:
        raise DomainError("simulate_local_times", f"n = {n} must be at least 1")
    if forced_steps is not None:
        if len(forced_steps) != n:
            raise DomainError(
                "simulate_local_times",
                f"{len(forced_steps)} forced steps given for n = {n}",
            )
        steps = np.asarray(forced_steps, dtype=np.int64)
    else:
        if rng is None:
            raise DomainError("simulate_local_times", "either rng or forced_steps")
        steps = model.sample_steps(rng, n)

    table = LocalTimeTable.tracking(betas)
    for step in steps:
        table.step(step)
    return table


@dataclass(frozen=True)
class PathBatch:
    """
    `positions[r, k-1] = S_k` of replica `r`. `prior_visits[r, k-1]` is the number of
    times `j < k` with `S_j = S_k`, so `N_k(S_k) = prior_visits + 1`.
    """

    positions: np.ndarray

    @staticmethod
    def from_steps(steps: np.ndarray) -> "PathBatch":
        return PathBatch(np.cumsum(np.atleast_2d(steps), axis=1, dtype=np.int64))

    @staticmethod
    def simulate(
        model: WalkModel, n: int, replicas: int, rng: np.random.Generator
    ) -> "PathBatch":
        if n < 1:
            raise DomainError("PathBatch.simulate", f"n = {n} must be at least 1")
        return PathBatch.from_steps(model.sample_steps(rng, (replicas, n)))

    @property
    def replicas(self) -> int:
        return self.positions.shape[0]

    @property
    def n(self) -> int:
        return self.positions.shape[1]

    @cached_property
    def _visit_order(self) -> tuple[np.ndarray, np.ndarray]:
        """Flat indices sorted by (replica, site, time) and the start of every run."""
        replicas, steps = self.positions.shape
        rows = np.repeat(np.arange(replicas), steps)
        times = np.tile(np.arange(steps), replicas)
        order = np.lexsort((times, self.positions.ravel(), rows))
        sorted_rows = rows[order]
        sorted_sites = self.positions.ravel()[order]
        new_run = np.ones(order.size, dtype=bool)
        new_run[1:] = (sorted_rows[1:] != sorted_rows[:-1]) | (
            sorted_sites[1:] != sorted_sites[:-1]
        )
        return order, np.flatnonzero(new_run)

    @cached_property
    def prior_visits(self) -> np.ndarray:
        order, run_starts = self._visit_order
        run_lengths = np.diff(np.append(run_starts, order.size))
        rank = np.arange(order.size) - np.repeat(run_starts, run_lengths)
        visits = np.empty(order.size, dtype=np.int64)
        visits[order] = rank
        return visits.reshape(self.positions.shape)

    @cached_property
    def site_runs(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Final local times as runs: `(replica, site, count)` per occupied site, grouped by
        replica in increasing order.
        """
        order, run_starts = self._visit_order
        counts = np.diff(np.append(run_starts, order.size))
        flat = order[run_starts]
        return (
            flat // self.n,
            self.positions.ravel()[flat],
            counts,
        )

    @cached_property
    def replica_run_starts(self) -> np.ndarray:
        """Index of each replica's first run in `site_runs`, for `np.*.reduceat`."""
        run_rows = self.site_runs[0]
        first = np.ones(run_rows.size, dtype=bool)
        first[1:] = run_rows[1:] != run_rows[:-1]
        return np.flatnonzero(first)

    def ranges(self) -> np.ndarray:
        return np.diff(np.append(self.replica_run_starts, self.site_runs[0].size))

    def v_prefix(self, beta: float) -> np.ndarray:
        """`V_k` for `k = 1..n` on every replica, from the increments `(c+1)^b - c^b`."""
        visits = self.prior_visits.astype(np.float64)
        return np.cumsum((visits + 1) ** beta - visits**beta, axis=1)

    def v_final(self, beta: float) -> np.ndarray:
        counts = self.site_runs[2].astype(np.float64)
        return np.add.reduceat(counts**beta, self.replica_run_starts)

    def table(self, replica: int) -> LocalTimeTable:
        rows, sites, counts = self.site_runs
        selected = rows == replica
        return LocalTimeTable(
            counts=dict(zip(sites[selected].tolist(), counts[selected].tolist())),
            n=self.n,
            position=int(self.positions[replica, -1]),
        )
