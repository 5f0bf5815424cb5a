"""Deterministic random-stream derivation for reproducible simulations.

Every stochastic component draws from its own counter-based Philox stream,
keyed by a master seed plus a short integer path.  The mixing is a plain
key-packing (no hashing), so the seed schedule is easy to replicate in any
language with a Philox4x64 implementation:

    key = master + (path[0] + 1) * 2**64 + (path[1] + 1) * 2**128
                 + (path[2] + 1) * 2**192

The ``+ 1`` offsets keep ``stream(m)``, ``stream(m, 0)`` and
``stream(m, 0, 0)`` distinct.  Philox guarantees independent output for
distinct keys.
"""

from __future__ import annotations

import numpy as np

DEFAULT_MASTER_SEED = 7

# Stream roles within one episode; sweeps prepend their own path components.
ENV_STREAM = 0
VOI_STREAM = 1
CONTINUATION_STREAM = 2
CONFIG_STREAM = 3
CALIBRATION_STREAM = 4

_MASK64 = (1 << 64) - 1


def stream(master_seed: int, *path: int) -> np.random.Generator:
    """Derive an independent Generator from a master seed and stream path.

    Accepts up to three path components, each a nonnegative int < 2**64 - 1.
    """
    if len(path) > 3:
        raise ValueError("stream path supports at most 3 components")
    key = master_seed & _MASK64
    for i, part in enumerate(path):
        if part < 0 or part >= _MASK64:
            raise ValueError(f"stream path component out of range: {part}")
        key += (part + 1) << (64 * (i + 1))
    return np.random.Generator(np.random.Philox(key=key))


def episode_streams(master_seed: int, seed: int) -> tuple[np.random.Generator, ...]:
    """(env, voi, continuation) streams for one episode seed."""
    return (
        stream(master_seed, seed, ENV_STREAM),
        stream(master_seed, seed, VOI_STREAM),
        stream(master_seed, seed, CONTINUATION_STREAM),
    )
