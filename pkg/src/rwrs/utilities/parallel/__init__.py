"""Utility for running replica chunks in parallel with a deterministic reduction order"""
import logging
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Any, TypeVar

from ...constants import REPLICA_CHUNK

T = TypeVar("T")


@dataclass(frozen=True)
class ParallelCommand:
    function: Callable
    parameters: dict[str, Any]


@dataclass(frozen=True)
class ChunkPlan:
    """Splits `replicas` into fixed size chunks. Chunk `i` covers replicas `[start, stop)`."""

    replicas: int
    chunk_size: int = REPLICA_CHUNK

    @property
    def chunks(self) -> list[tuple[int, int, int]]:
        return [
            (index, start, min(start + self.chunk_size, self.replicas))
            for index, start in enumerate(range(0, self.replicas, self.chunk_size))
        ]


def run_in_parallel(
    commands: list[ParallelCommand],
    number_of_threads: int,
) -> list[T]:
    """Results are returned in the order of `commands`, whatever order the workers finish in."""
    if number_of_threads <= 1:
        return [command.function(**command.parameters) for command in commands]

    with ThreadPoolExecutor(max_workers=number_of_threads) as executor:
        threads: list[Future] = [
            executor.submit(command.function, **command.parameters)
            for command in commands
        ]
        return [thread.result() for thread in threads]


def map_chunks(
    function: Callable[..., T],
    plan: ChunkPlan,
    combine: Callable[[T, T], T],
    number_of_threads: int = 1,
    **parameters: Any,
) -> T:
    """
    Calls `function(chunk=i, start=..., stop=..., **parameters)` for every chunk of the plan
    and folds the partial results with `combine` in chunk index order.
    """
    logging.getLogger(__name__).debug(
        f"{plan.replicas} replicas in {len(plan.chunks)} chunks "
        f"on {number_of_threads} thread(s)"
    )
    commands = [
        ParallelCommand(
            function=function,
            parameters={"chunk": index, "start": start, "stop": stop, **parameters},
        )
        for index, start, stop in plan.chunks
    ]
    partials: list[T] = run_in_parallel(commands, number_of_threads)
    return reduce(combine, partials)
