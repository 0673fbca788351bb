"""Decoders: plurality voting for the low regime and a brute-force reference."""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from typing import Iterable, List, Optional

from ..core.errors import AmbiguousMajority, PreconditionError, UnsupportedEd, WrongCount
from ..primitives import Message, Strand, SystemParams, make_message
from .enumeration import enumerate_outputs
from .model import ChannelParams, ReadPool, Regime

logger = logging.getLogger(__name__)


def plurality_decode(pool: ReadPool, params: SystemParams, ch: ChannelParams) -> Message:
    """
    Recover a distinct-data message from one low-regime output.

    Data-fields are error-free, so reads cluster by data-field; inside each
    cluster the source index holds at least floor(K/2)+1 of the K reads.
    """
    if ch.e_d != 0:
        raise UnsupportedEd(f"plurality decoding needs error-free data-fields, got e_d={ch.e_d}")
    if ch.regime is not Regime.LOW:
        raise PreconditionError(f"plurality decoding needs floor(tau K) < K/2, got {ch}")
    if pool.total != params.M * ch.K:
        raise WrongCount(f"expected {params.M * ch.K} reads, got {pool.total}")

    clusters = defaultdict(Counter)
    for read, count in pool.reads:
        clusters[read.data][read.index] += count
    if len(clusters) != params.M:
        raise WrongCount(f"expected {params.M} distinct data-fields, got {len(clusters)}")

    strands = []
    for data, votes in sorted(clusters.items()):
        ranked = votes.most_common(2)
        if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
            raise AmbiguousMajority(
                f"data-field {data}: indices {ranked[0][0]} and {ranked[1][0]} tie at {ranked[0][1]} reads"
            )
        strands.append(Strand(ranked[0][0], data))
    return make_message(params, strands)


def brute_force_decode(
    pool: ReadPool, C: Iterable[Message], ch: ChannelParams, cap: Optional[int] = None
) -> List[Message]:
    """Every codeword that could have produced `pool`. Exponential; for tiny codes only."""
    candidates = [Z for Z in sorted(set(C)) if pool in enumerate_outputs(Z, ch, cap)]
    if len(candidates) > 1:
        logger.debug(f"pool {pool} is consistent with {len(candidates)} codewords")
    return candidates
