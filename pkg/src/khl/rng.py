"""Deterministic random-stream derivation.

All stochastic entry points accept either a ``numpy.random.Generator``
(draws are made sequentially from it) or an integer master seed.  In the
seed case every Monte Carlo sample ``i`` gets its own stream derived as
``SeedSequence([master_seed, i])``, so results are independent of how
samples are partitioned across workers.
"""

from __future__ import annotations

from typing import Iterator, Union

import numpy as np

RngOrSeed = Union[int, np.integer, np.random.Generator]


def rng_for(master_seed: int, *path: int) -> np.random.Generator:
    """Generator for the stream addressed by (master_seed, *path)."""
    return np.random.default_rng(np.random.SeedSequence([int(master_seed), *map(int, path)]))


def as_rng(rng_or_seed: RngOrSeed) -> np.random.Generator:
    if isinstance(rng_or_seed, np.random.Generator):
        return rng_or_seed
    return rng_for(int(rng_or_seed))


def per_sample_rngs(rng_or_seed: RngOrSeed, m: int) -> Iterator[np.random.Generator]:
    """Yield one generator per sample.

    For an integer seed each sample gets the stream (seed, i); for a
    Generator the same object is yielded every time (sequential draws).
    """
    if isinstance(rng_or_seed, np.random.Generator):
        for _ in range(m):
            yield rng_or_seed
    else:
        for i in range(m):
            yield rng_for(int(rng_or_seed), i)


def random_uint(rng: np.random.Generator, bits: int) -> int:
    """Uniform integer in [0, 2**bits) assembled from 32-bit draws."""
    words = (bits + 31) // 32
    value = 0
    for _ in range(words):
        value = (value << 32) | int(rng.integers(0, 1 << 32, dtype=np.uint64))
    excess = 32 * words - bits
    return value >> excess
