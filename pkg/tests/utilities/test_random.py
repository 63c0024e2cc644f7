import numpy as np

from src.rwrs.utilities.random import StreamPurpose, chunk_generator, site_uniforms


class TestRandomStreams:
    def test_chunk_generator_is_deterministic(self):
        first = chunk_generator(42, StreamPurpose.WALK, 3).random(8)
        second = chunk_generator(42, StreamPurpose.WALK, 3).random(8)
        assert np.array_equal(first, second)

    def test_streams_are_separated_by_purpose_and_chunk(self):
        walk = chunk_generator(42, StreamPurpose.WALK, 0).random(8)
        scenery = chunk_generator(42, StreamPurpose.SCENERY, 0).random(8)
        next_chunk = chunk_generator(42, StreamPurpose.WALK, 1).random(8)
        assert not np.array_equal(walk, scenery)
        assert not np.array_equal(walk, next_chunk)

    def test_site_uniforms_are_pure(self):
        sites = np.arange(-50, 50)
        first = site_uniforms(7, 2, sites)
        second = site_uniforms(7, 2, sites)
        assert np.array_equal(first, second)
        assert np.all((first > 0) & (first < 1))
        assert not np.array_equal(first, site_uniforms(7, 2, sites, draw=1))
        assert not np.array_equal(first, site_uniforms(8, 2, sites))

    def test_site_uniforms_broadcast(self):
        replicas = np.arange(3)[:, None]
        sites = np.arange(5)[None, :]
        grid = site_uniforms(1, replicas, sites)
        assert grid.shape == (3, 5)
        assert grid[1, 4] == site_uniforms(1, 1, 4)[0]

    def test_site_uniforms_look_uniform(self):
        values = site_uniforms(11, 0, np.arange(100_000))
        assert abs(values.mean() - 0.5) < 0.01
        assert abs(values.var() - 1 / 12) < 0.005
