"""
Counter-based random streams.

Two kinds of randomness are needed. Walk steps and sampler draws come from
`numpy.random.Generator` instances over the `Philox` counter-based bit generator, one per
`(seed, purpose, chunk)` triple, so that a chunk of replicas sees the same numbers no matter
which worker thread runs it. Scenery values are *derived* rather than drawn: the uniform
attached to `(seed, replica, site, draw)` is a pure hash of the key, so a scenery never has to
be stored and revisiting a site always yields the same value.
"""
from enum import IntEnum

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_2 = np.uint64(0x94D049BB133111EB)
_MANTISSA = 2.0**-53


class StreamPurpose(IntEnum):
    WALK = 1
    SCENERY = 2
    SAMPLER = 3
    BOOTSTRAP = 4


def chunk_generator(
    seed: int, purpose: StreamPurpose, chunk: int
) -> np.random.Generator:
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(int(purpose), chunk))
    return np.random.Generator(np.random.Philox(sequence))


def _as_key(values) -> np.ndarray:
    return np.atleast_1d(np.asarray(values, dtype=np.int64)).view(np.uint64)


def _mix(keys: np.ndarray) -> np.ndarray:
    """splitmix64 finaliser; uint64 arithmetic wraps modulo 2**64."""
    z = keys + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX_1
    z = (z ^ (z >> np.uint64(27))) * _MIX_2
    return z ^ (z >> np.uint64(31))


def site_uniforms(seed: int, replicas, sites, draw: int = 0) -> np.ndarray:
    """Uniforms in the open interval (0, 1), one per (replica, site) pair (broadcast)."""
    with np.errstate(over="ignore"):
        state = _mix(_as_key(seed) ^ _mix(_as_key(draw)))
        state = _mix(state ^ _as_key(replicas))
        state = _mix(state ^ _as_key(sites))
    return (state >> np.uint64(11)).astype(np.float64) * _MANTISSA + _MANTISSA / 2
