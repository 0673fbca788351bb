"""Whether a code corrects the channel: by brute force, and by its DNA-distance."""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from ..core.errors import ParamMismatch, UnsupportedEd
from ..metric import code_dna_distance, exceeds, format_distance
from ..primitives import DataMultiset, Message, data_multiset
from .enumeration import OutputMemo, enumerate_outputs
from .model import ChannelParams, ReadPool, Regime

logger = logging.getLogger(__name__)


class Guarantee(str, Enum):
    GUARANTEED_YES = "guaranteed_yes"
    GUARANTEED_NO = "guaranteed_no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Disjointness:
    disjoint: bool
    witness: Optional[ReadPool] = None


@dataclass(frozen=True)
class DccCheck:
    is_dcc: bool
    witness: Optional[Tuple[Message, Message, ReadPool]] = None


def outputs_disjoint(
    Z1: Message, Z2: Message, ch: ChannelParams, cap: Optional[int] = None, memo: Optional[OutputMemo] = None
) -> Disjointness:
    """True iff no read pool is a possible output of both Z1 and Z2."""
    if Z1.params != Z2.params:
        raise ParamMismatch(f"messages have different parameters: {Z1.params} vs {Z2.params}")
    common = enumerate_outputs(Z1, ch, cap, memo) & enumerate_outputs(Z2, ch, cap, memo)
    if common:
        return Disjointness(False, min(common))
    return Disjointness(True)


def is_dcc_brute(C: Iterable[Message], ch: ChannelParams, cap: Optional[int] = None) -> DccCheck:
    """
    Pairwise disjointness of output sets; the first failing pair is the witness.

    Each codeword's outputs are enumerated once and released when the check returns.
    """
    codewords = sorted(set(C))
    memo: OutputMemo = {}
    for Z1, Z2 in combinations(codewords, 2):
        result = outputs_disjoint(Z1, Z2, ch, cap, memo)
        if not result.disjoint:
            logger.debug(f"{Z1} and {Z2} share the output {result.witness}")
            return DccCheck(False, (Z1, Z2, result.witness))
    return DccCheck(True)


def split_by_multiset(C: Iterable[Message]) -> Dict[DataMultiset, List[Message]]:
    """The groups C_U of codewords sharing the data-field multiset U."""
    groups = defaultdict(list)
    for Z in sorted(set(C)):
        groups[data_multiset(Z)].append(Z)
    return dict(groups)


def is_dcc_by_distance(C: Iterable[Message], ch: ChannelParams) -> Guarantee:
    """
    Decide the correcting property from group distances alone, for e_d = 0.

    Codewords with different data-field multisets never share an output, so
    each group C_U is judged on its own:
      - tau = 1: the group must have D(C_U) > 2 e_i, and this is exact.
      - high regime: D(C_U) <= e_i rules the code out; D(C_U) > e_i certifies
        the group only when U is a set.
      - low regime: a group is certified when U is a set or D(C_U) > e_i.
    A group of one codeword is always certified. Anything not certified and
    not ruled out is INCONCLUSIVE.
    """
    if ch.e_d > 0:
        raise UnsupportedEd(f"distance criteria hold only for e_d = 0, got e_d={ch.e_d}")
    regime = ch.regime
    verdict = Guarantee.GUARANTEED_YES
    for U, members in split_by_multiset(C).items():
        if len(members) < 2:
            continue
        D = code_dna_distance(members)
        logger.debug(f"group {U}: {len(members)} codewords, D={format_distance(D)}")
        if regime is Regime.TAU1:
            if not exceeds(D, 2 * ch.e_i):
                return Guarantee.GUARANTEED_NO
        elif regime is Regime.HIGH:
            if not exceeds(D, ch.e_i):
                return Guarantee.GUARANTEED_NO
            if not U.is_set():
                verdict = Guarantee.INCONCLUSIVE
        elif not (U.is_set() or exceeds(D, ch.e_i)):
            verdict = Guarantee.INCONCLUSIVE
    return verdict
