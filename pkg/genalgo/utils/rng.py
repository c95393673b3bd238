"""Deterministic random source.

All randomness in a run flows from one ``numpy.random.Generator`` backed by the
counter-based Philox4x64 bit generator. The bit generator is fixed so that logged
runs stay reproducible across releases.
"""

import numpy as np

MAX_SEED = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    """Create the run's random generator.

    Args:
        seed: Unsigned 64-bit seed.

    Returns:
        A Philox-backed generator.

    Raises:
        ValueError: If the seed is outside ``[0, 2**64)``.
    """
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"Seed {seed} is not an unsigned 64-bit integer.")
    return np.random.Generator(np.random.Philox(seed))
