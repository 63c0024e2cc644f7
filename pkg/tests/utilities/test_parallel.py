import time

from src.rwrs.utilities.parallel import (
    ChunkPlan,
    ParallelCommand,
    map_chunks,
    run_in_parallel,
)


def _slow_identity(value: int) -> int:
    time.sleep(0.01 * (5 - value))
    return value


def _chunk_trace(chunk: int, start: int, stop: int, offset: int) -> list[int]:
    return [chunk * 1000 + replica + offset for replica in range(start, stop)]


class TestParallel:
    def test_chunk_plan(self):
        assert ChunkPlan(1200).chunks == [(0, 0, 500), (1, 500, 1000), (2, 1000, 1200)]
        assert ChunkPlan(10, chunk_size=5).chunks == [(0, 0, 5), (1, 5, 10)]

    def test_run_in_parallel_keeps_command_order(self):
        commands = [
            ParallelCommand(function=_slow_identity, parameters={"value": value})
            for value in range(5)
        ]
        assert run_in_parallel(commands, number_of_threads=4) == list(range(5))

    def test_map_chunks_does_not_depend_on_threads(self):
        plan = ChunkPlan(23, chunk_size=4)
        single = map_chunks(_chunk_trace, plan, list.__add__, 1, offset=7)
        threaded = map_chunks(_chunk_trace, plan, list.__add__, 3, offset=7)
        assert single == threaded
        assert len(single) == 23
        assert single[-1] == 5 * 1000 + 22 + 7
