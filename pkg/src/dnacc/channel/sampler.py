"""Seeded sampling of one channel output."""
from __future__ import annotations

import logging

import numpy as np

from ..core.rng import make_rng
from ..primitives import BitVector, Message, Strand
from .model import ChannelParams, ReadPool

logger = logging.getLogger(__name__)


def _flip_random(word: BitVector, weight: int, rng: np.random.Generator) -> BitVector:
    if weight == 0:
        return word
    positions = rng.choice(word.length, size=weight, replace=False)
    return word.flip(int(p) for p in positions)


def _corrupt(s: Strand, ch: ChannelParams, rng: np.random.Generator, worst_case: bool) -> Strand:
    index_weight = min(ch.e_i, s.index.length)
    data_weight = min(ch.e_d, s.data.length)
    if not worst_case:
        index_weight = int(rng.integers(0, index_weight + 1))
        data_weight = int(rng.integers(0, data_weight + 1))
    return Strand(_flip_random(s.index, index_weight, rng), _flip_random(s.data, data_weight, rng))


def sample_output(Z: Message, ch: ChannelParams, seed: int, worst_case: bool = False) -> ReadPool:
    """
    One output of the channel for Z, deterministic in `seed`.

    Per strand, the number of erroneous copies is uniform on {0..floor(tau K)}
    and each erroneous copy gets a uniform index-error weight in {0..e_i} and
    data-error weight in {0..e_d} at uniform positions. `worst_case` pins the
    count to floor(tau K) and the weights to their maxima.
    """
    rng = make_rng(seed)
    f = ch.max_erroneous
    reads = []
    for s in Z.strands:
        erroneous = f if worst_case else int(rng.integers(0, f + 1))
        reads.extend([s] * (ch.K - erroneous))
        reads.extend(_corrupt(s, ch, rng, worst_case) for _ in range(erroneous))
    pool = ReadPool.from_reads(reads)
    logger.debug(f"sampled {pool.total} reads for {ch} with seed {seed}")
    return pool
