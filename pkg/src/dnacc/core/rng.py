import numpy as np

from .errors import InvalidParams


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator; every random choice in a run flows from this one seed."""
    if not 0 <= seed < 2 ** 64:
        raise InvalidParams(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.Philox(seed))
