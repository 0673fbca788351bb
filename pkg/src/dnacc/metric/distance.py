"""The DNA-distance between messages and the index-distance between index tuples."""
from __future__ import annotations

import logging
from itertools import combinations
from typing import TYPE_CHECKING, Dict, Iterable, Optional

from ..core.errors import ParamMismatch, TooFewCodewords
from ..primitives import BitVector, Message, data_multiset, hamming
from .matching import Matching, bottleneck_matching
from .values import INF, DnaDistanceValue, minimum

if TYPE_CHECKING:
    from ..indexcodes.tuples import IndexTuple

logger = logging.getLogger(__name__)


def _check_params(Z1: Message, Z2: Message) -> None:
    if Z1.params != Z2.params:
        raise ParamMismatch(f"messages have different parameters: {Z1.params} vs {Z2.params}")


def distance_breakdown(Z1: Message, Z2: Message) -> Optional[Dict[BitVector, Matching]]:
    """Optimal matching between I(u, Z1) and I(u, Z2) for every data-field u.

    None when the data-field multisets differ (the distance is infinite).
    """
    _check_params(Z1, Z2)
    if data_multiset(Z1) != data_multiset(Z2):
        return None
    groups1, groups2 = Z1.index_groups, Z2.index_groups
    return {u: bottleneck_matching(groups1[u], groups2[u]) for u in sorted(groups1)}


def dna_distance(Z1: Message, Z2: Message) -> DnaDistanceValue:
    breakdown = distance_breakdown(Z1, Z2)
    if breakdown is None:
        return INF
    return max(m.weight for m in breakdown.values())


def code_dna_distance(C: Iterable[Message]) -> DnaDistanceValue:
    """Minimum DNA-distance over pairs of distinct codewords."""
    codewords = sorted(set(C))
    if len(codewords) < 2:
        raise TooFewCodewords(f"a code distance needs two distinct codewords, got {len(codewords)}")
    return minimum(dna_distance(a, b) for a, b in combinations(codewords, 2))


def index_distance(c1: "IndexTuple", c2: "IndexTuple") -> int:
    """Largest positional Hamming distance between two index tuples."""
    if len(c1.entries) != len(c2.entries) or c1.l != c2.l:
        raise ParamMismatch(
            f"index tuples differ in shape: (l={c1.l}, M={len(c1.entries)}) vs (l={c2.l}, M={len(c2.entries)})"
        )
    return max(hamming(a, b) for a, b in zip(c1.entries, c2.entries))
