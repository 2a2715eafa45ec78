"""Derivation of independent, reproducible seeds.

Run `i` of an experiment with master seed `s` uses `splitmix64(s ^ i)`,
so every run can be reproduced on its own.
"""
from typing import Sequence

import numpy as np

_MASK = (1 << 64) - 1


def splitmix64(value: int) -> int:
    """Apply one step of the SplitMix64 generator to a 64-bit value."""
    z = (value + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def run_seed(master_seed: int, run_index: int) -> int:
    """Get the seed of one run of an experiment."""
    return splitmix64((master_seed ^ run_index) & _MASK)


def stream(seed: int, *keys: int) -> np.random.Generator:
    """Create a generator owned by one consumer, keyed by a seed and extra integers."""
    entropy: Sequence[int] = [seed & _MASK, *(k & _MASK for k in keys)]
    return np.random.default_rng(np.random.SeedSequence(entropy))
