"""Strands, messages and data-field multisets."""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple

from ..core.errors import DuplicateIndex, InvalidParams, LengthMismatch, WrongCount
from .bits import BitVector


@dataclass(frozen=True, order=True)
class SystemParams:
    """M strands of L bits each, the first l bits being the index-field."""
    M: int
    L: int
    l: int

    def __post_init__(self):
        if self.M < 1:
            raise InvalidParams(f"M must be >= 1, got {self.M}")
        if (1 << self.l) < self.M:
            raise InvalidParams(f"l={self.l} cannot index M={self.M} strands")
        if not 1 <= self.l < self.L:
            raise InvalidParams(f"need 1 <= l < L, got l={self.l}, L={self.L}")

    @property
    def data_length(self) -> int:
        return self.L - self.l

    @property
    def beta(self) -> float:
        return math.log2(self.M) / self.L


@dataclass(frozen=True, order=True)
class Strand:
    index: BitVector
    data: BitVector

    def __str__(self) -> str:
        return f"({self.index},{self.data})"


@dataclass(frozen=True)
class DataMultiset:
    """Canonical multiset of data-fields: (value, multiplicity) pairs sorted by value."""
    entries: Tuple[Tuple[BitVector, int], ...]

    @classmethod
    def from_iterable(cls, items: Iterable[BitVector]) -> "DataMultiset":
        return cls(tuple(sorted(Counter(items).items())))

    @property
    def total(self) -> int:
        return sum(count for _, count in self.entries)

    def support(self) -> FrozenSet[BitVector]:
        return frozenset(value for value, _ in self.entries)

    def multiplicity(self, u: BitVector) -> int:
        for value, count in self.entries:
            if value == u:
                return count
        return 0

    def is_set(self) -> bool:
        return all(count == 1 for _, count in self.entries)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{u}x{c}" for u, c in self.entries) + "}"


@dataclass(frozen=True, order=True)
class Message:
    """An element of X_{M,L,l}: M strands with pairwise-distinct index-fields.

    Strands are kept in ascending index order, so equal sets compare and hash equal.
    """
    params: SystemParams
    strands: Tuple[Strand, ...]
    _groups: Dict[BitVector, FrozenSet[BitVector]] = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        params = self.params
        strands = tuple(self.strands)
        if len(strands) != params.M:
            raise WrongCount(f"expected {params.M} strands, got {len(strands)}")
        for s in strands:
            if s.index.length != params.l or s.data.length != params.data_length:
                raise LengthMismatch(
                    f"strand {s} does not match l={params.l}, L-l={params.data_length}"
                )
        ordered = tuple(sorted(strands))
        for a, b in zip(ordered, ordered[1:]):
            if a.index == b.index:
                raise DuplicateIndex(f"index {a.index} used by {a} and {b}")
        object.__setattr__(self, "strands", ordered)

        groups = defaultdict(set)
        for s in ordered:
            groups[s.data].add(s.index)
        object.__setattr__(self, "_groups", {u: frozenset(ix) for u, ix in groups.items()})

    @property
    def index_groups(self) -> Dict[BitVector, FrozenSet[BitVector]]:
        """data-field -> I(u, Z)."""
        return self._groups

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.strands) + "}"


def make_message(params: SystemParams, strands: Iterable[Strand]) -> Message:
    """Validate membership in X_{M,L,l} and return the canonical Message."""
    return Message(params, tuple(strands))


def message_from_pairs(params: SystemParams, pairs: Iterable[Tuple[str, str]]) -> Message:
    """Build a Message from (index, data) bit strings."""
    return make_message(
        params,
        (Strand(BitVector.from_str(i), BitVector.from_str(u)) for i, u in pairs),
    )


def data_multiset(Z: Message) -> DataMultiset:
    return DataMultiset.from_iterable(s.data for s in Z.strands)


def data_set(Z: Message) -> FrozenSet[BitVector]:
    """S(Z), the support of the data-field multiset."""
    return frozenset(Z.index_groups)


def indices_of(u: BitVector, Z: Message) -> FrozenSet[BitVector]:
    """I(u, Z); empty when u is not a data-field of Z."""
    return Z.index_groups.get(u, frozenset())


def is_distinct_data(Z: Message) -> bool:
    return len(Z.index_groups) == Z.params.M
