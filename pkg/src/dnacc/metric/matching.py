"""Bottleneck bipartite matching between index sets, and Hall-condition witnesses.

The bottleneck value is found by binary search over the distinct pairwise
Hamming distances; each step is a maximum-matching feasibility test on the
threshold graph {(a, b): d_H(a, b) <= t}.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Collection, Dict, FrozenSet, List, Optional, Set, Tuple

from ..core.errors import LengthMismatch, SizeMismatch
from ..primitives import BitVector, hamming

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    pairs: Tuple[Tuple[BitVector, BitVector], ...]

    @property
    def weight(self) -> int:
        """Largest Hamming distance over the matched pairs."""
        return max((hamming(a, b) for a, b in self.pairs), default=0)

    def as_dict(self) -> Dict[BitVector, BitVector]:
        return dict(self.pairs)


class BipartiteMatcher:
    """
    Maximum-cardinality matching by augmenting paths.

    `adjacency[u]` lists the right vertices adjacent to left vertex `u`.
    After `run()`, the matching state is kept so that a Hall violator can be
    read off the alternating-path search when the matching is not perfect.
    """

    def __init__(self, adjacency: List[List[int]], n_right: int):
        self.adjacency = adjacency
        self.match_left: List[int] = [-1] * len(adjacency)
        self.match_right: List[int] = [-1] * n_right

    def run(self) -> int:
        size = 0
        for u in range(len(self.adjacency)):
            if self._augment(u, set()):
                size += 1
        return size

    def _augment(self, u: int, visited: Set[int]) -> bool:
        for v in self.adjacency[u]:
            if v in visited:
                continue
            visited.add(v)
            if self.match_right[v] == -1 or self._augment(self.match_right[v], visited):
                self.match_left[u] = v
                self.match_right[v] = u
                return True
        return False

    def is_perfect(self) -> bool:
        return all(v != -1 for v in self.match_left)

    def hall_violator(self) -> Optional[Set[int]]:
        """
        Left vertices reachable by alternating paths from unmatched left vertices.

        Every right vertex reached is matched (the matching is maximum), and its
        partner is reached too, so |N(Y)| = |Y| - #unmatched < |Y|.
        """
        free = [u for u, v in enumerate(self.match_left) if v == -1]
        if not free:
            return None
        seen_left = set(free)
        seen_right: Set[int] = set()
        queue = deque(free)
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v in seen_right:
                    continue
                seen_right.add(v)
                partner = self.match_right[v]
                if partner not in seen_left:
                    seen_left.add(partner)
                    queue.append(partner)
        return seen_left


def _prepare(A: Collection[BitVector], B: Collection[BitVector]):
    left, right = sorted(set(A)), sorted(set(B))
    if len(left) != len(right):
        raise SizeMismatch(f"index sets differ in size: {len(left)} vs {len(right)}")
    lengths = {x.length for x in left} | {x.length for x in right}
    if len(lengths) > 1:
        raise LengthMismatch(f"index sets mix bit lengths {sorted(lengths)}")
    distances = [[hamming(a, b) for b in right] for a in left]
    return left, right, distances


def _matcher_at(distances: List[List[int]], t: int) -> BipartiteMatcher:
    adjacency = [[j for j, d in enumerate(row) if d <= t] for row in distances]
    matcher = BipartiteMatcher(adjacency, len(distances))
    matcher.run()
    return matcher


def bottleneck_matching(A: Collection[BitVector], B: Collection[BitVector]) -> Matching:
    """A bijection A -> B minimizing the largest pairwise Hamming distance."""
    left, right, distances = _prepare(A, B)
    if not left:
        raise SizeMismatch("bottleneck matching needs non-empty index sets")

    thresholds = sorted({d for row in distances for d in row})
    lo, hi = 0, len(thresholds) - 1
    best = _matcher_at(distances, thresholds[hi])
    while lo < hi:
        mid = (lo + hi) // 2
        matcher = _matcher_at(distances, thresholds[mid])
        if matcher.is_perfect():
            best, hi = matcher, mid
        else:
            lo = mid + 1

    pairs = tuple((left[u], right[v]) for u, v in enumerate(best.match_left))
    logger.debug(f"bottleneck over {len(left)} indices: threshold {thresholds[hi]}")
    return Matching(pairs)


def hall_violating_set(
    A: Collection[BitVector], B: Collection[BitVector], t: int
) -> Optional[FrozenSet[BitVector]]:
    """Y ⊆ A with |Y| > |N(Y)| in the graph of pairs within distance t, or None if A, B match perfectly."""
    left, _, distances = _prepare(A, B)
    matcher = _matcher_at(distances, t)
    violator = matcher.hall_violator()
    if violator is None:
        return None
    return frozenset(left[u] for u in violator)


def neighbourhood(Y: Collection[BitVector], B: Collection[BitVector], t: int) -> FrozenSet[BitVector]:
    """N(Y): members of B within distance t of some member of Y."""
    return frozenset(b for b in B if any(hamming(a, b) <= t for a in Y))
