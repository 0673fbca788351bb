"""Exact radius-r balls B_r(Z) = {Y : D(Z, Y) <= r}."""
from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import FrozenSet, List, Optional

from ..core.errors import BudgetExceeded
from ..core.settings import resolve_cap
from ..primitives import BitVector, Message, Strand, hamming_ball
from .matching import hall_violating_set

logger = logging.getLogger(__name__)


def ball(Z: Message, r: int, cap: Optional[int] = None) -> FrozenSet[Message]:
    """
    Enumerate B_r(Z).

    Every Y in the ball has the data-field multiset of Z, and for each
    data-field u the new index set lies inside the radius-r Hamming balls
    around I(u, Z) and admits a matching of weight <= r. Candidate index sets
    are enumerated per data-field, filtered by that matching test, then
    combined so that no index is used twice.
    """
    cap = resolve_cap(cap, "ball_candidates")
    if r < 0:
        return frozenset()

    groups = sorted(Z.index_groups.items())
    pools: List[List[BitVector]] = []
    required = 1
    for _, indices in groups:
        pool = sorted(set().union(*(hamming_ball(i, r) for i in indices)))
        pools.append(pool)
        required *= math.comb(len(pool), len(indices))
    if required > cap:
        raise BudgetExceeded("ball candidate index sets", required, cap)
    logger.debug(f"ball radius {r}: {required} candidate index sets over {len(groups)} data-fields")

    options: List[List[FrozenSet[BitVector]]] = []
    for (_, indices), pool in zip(groups, pools):
        options.append([
            frozenset(candidate)
            for candidate in combinations(pool, len(indices))
            if hall_violating_set(indices, candidate, r) is None
        ])

    members = set()

    def extend(k: int, used: FrozenSet[BitVector], strands: List[Strand]) -> None:
        if k == len(groups):
            members.add(Message(Z.params, tuple(strands)))
            return
        u = groups[k][0]
        for candidate in options[k]:
            if used.isdisjoint(candidate):
                extend(k + 1, used | candidate, strands + [Strand(i, u) for i in candidate])

    extend(0, frozenset(), [])
    return frozenset(members)
