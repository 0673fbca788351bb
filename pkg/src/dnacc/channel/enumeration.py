"""Exhaustive enumeration of B^K_{(tau,e_i,e_d)}(Z) at tiny scale."""
from __future__ import annotations

import logging
import math
from collections import Counter
from itertools import combinations_with_replacement, product
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..core.errors import BudgetExceeded
from ..core.settings import resolve_cap
from ..primitives import Message, Strand, hamming_ball
from .model import ChannelParams, ReadPool

logger = logging.getLogger(__name__)


def noisy_reads(s: Strand, ch: ChannelParams) -> List[Strand]:
    """Every read a single erroneous copy of s can produce (s itself included)."""
    return [
        Strand(index, data)
        for index in hamming_ball(s.index, ch.e_i)
        for data in hamming_ball(s.data, ch.e_d)
    ]


def _multisets(n: int, size: int) -> int:
    return math.comb(n + size - 1, size) if size else 1


def output_count_estimate(Z: Message, ch: ChannelParams) -> int:
    """Upper bound on |B^K(Z)|: the product of per-strand output counts, before merging."""
    total = 1
    for s in Z.strands:
        alternatives = len(noisy_reads(s, ch)) - 1
        total *= sum(_multisets(alternatives, c) for c in range(ch.max_erroneous + 1))
    return total


def _strand_outputs(s: Strand, ch: ChannelParams) -> List[Counter]:
    """All K-read multisets of s holding at most floor(tau K) reads other than s."""
    alternatives = [r for r in noisy_reads(s, ch) if r != s]
    outputs = []
    for c in range(ch.max_erroneous + 1):
        for wrong in combinations_with_replacement(alternatives, c):
            reads = Counter(wrong)
            reads[s] += ch.K - c
            outputs.append(reads)
    return outputs


def _enumerate(Z: Message, ch: ChannelParams) -> FrozenSet[ReadPool]:
    per_strand = [_strand_outputs(s, ch) for s in Z.strands]
    pools = set()
    for choice in product(*per_strand):
        merged = Counter()
        for reads in choice:
            merged.update(reads)
        pools.add(ReadPool.from_counter(merged))
    return frozenset(pools)


OutputMemo = Dict[Tuple[Message, ChannelParams], FrozenSet[ReadPool]]


def enumerate_outputs(
    Z: Message, ch: ChannelParams, cap: Optional[int] = None, memo: Optional[OutputMemo] = None
) -> FrozenSet[ReadPool]:
    """
    The exact, deduplicated set of read pools the channel can emit for Z.

    Pass a `memo` dict to reuse output sets across calls; nothing is kept
    once the caller drops it.
    """
    if memo is not None and (Z, ch) in memo:
        return memo[Z, ch]
    cap = resolve_cap(cap, "channel_outputs")
    estimate = output_count_estimate(Z, ch)
    if estimate > cap:
        raise BudgetExceeded("channel output enumeration", estimate, cap)
    pools = _enumerate(Z, ch)
    logger.debug(f"{len(pools)} distinct outputs (estimate {estimate}) for {Z} under {ch}")
    if memo is not None:
        memo[Z, ch] = pools
    return pools
