"""Seeded, splittable random streams.

Every random consumer gets its own PCG64 stream derived from a master seed and
an integer key path::

    substream(seed, *key) == Generator(PCG64(SeedSequence(seed, spawn_key=key)))

SeedSequence hashes (seed, key) into the generator state, so streams for
different keys are independent and results do not depend on the order in
which they are created.
"""

from __future__ import annotations

import numpy as np


def substream(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))))


def derive_seed(seed: int, *key: int) -> int:
    """A 64-bit seed for the sub-task identified by ``key``."""
    state = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key)).generate_state(1, np.uint64)
    return int(state[0])
