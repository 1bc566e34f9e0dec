"""Deterministic random-stream derivation.

Every stochastic routine in the package takes an explicit
``numpy.random.Generator``.  Independent parts of a computation (sweep
cells, repetitions) derive their own generator from the master seed and
a tuple of integer context keys, so results do not depend on execution
order and remain reproducible when cells run in parallel.
"""

from __future__ import annotations

import numpy as np


def substream(master_seed: int, *keys: int) -> np.random.Generator:
    """Generator for the stream identified by (master_seed, *keys)."""
    if master_seed < 0:
        raise ValueError("master seed must be a nonnegative integer")
    if any(k < 0 for k in keys):
        raise ValueError("stream keys must be nonnegative integers")
    return np.random.default_rng(np.random.SeedSequence([master_seed, *keys]))
