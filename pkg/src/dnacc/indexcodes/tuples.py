"""Index tuples, index codes, and the vectorized distance validator."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DuplicateIndex, InvalidCode, InvalidParams, LengthMismatch, ParamMismatch
from ..primitives import BitVector, popcount_array

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class IndexTuple:
    """An element of I(l, M): M pairwise-distinct l-bit indices, in position order."""
    entries: Tuple[BitVector, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise InvalidParams("an index tuple needs at least one entry")
        if any(e.length != entries[0].length for e in entries):
            raise LengthMismatch(f"entries of {_fmt(entries)} differ in length")
        if len(set(entries)) != len(entries):
            raise DuplicateIndex(f"entries of {_fmt(entries)} repeat an index")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_strs(cls, words: Iterable[str]) -> "IndexTuple":
        return cls(tuple(BitVector.from_str(w) for w in words))

    @classmethod
    def from_values(cls, l: int, values: Iterable[int]) -> "IndexTuple":
        return cls(tuple(BitVector(l, int(v)) for v in values))

    @property
    def l(self) -> int:
        return self.entries[0].length

    @property
    def M(self) -> int:
        return len(self.entries)

    def values(self) -> List[int]:
        return [e.value for e in self.entries]

    def __str__(self) -> str:
        return _fmt(self.entries)


def _fmt(entries: Sequence[BitVector]) -> str:
    return " ".join(str(e) for e in entries)


@dataclass(frozen=True)
class Validation:
    valid: bool
    pair: Optional[Tuple[IndexTuple, IndexTuple]] = None
    distance: Optional[int] = None


def rows_array(rows: Sequence[IndexTuple]) -> np.ndarray:
    """Rows as an (n, M) integer matrix."""
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array([r.values() for r in rows], dtype=np.int64)


def distances_to(row: np.ndarray, others: np.ndarray, l: int) -> np.ndarray:
    """Index-distance from one row to each row of `others`."""
    if len(others) == 0:
        return np.zeros(0, dtype=np.int64)
    return popcount_array(others ^ row, l).max(axis=1)


def _check_shapes(rows: Sequence[IndexTuple]) -> None:
    for r in rows[1:]:
        if r.M != rows[0].M or r.l != rows[0].l:
            raise ParamMismatch(f"rows of different shape: '{rows[0]}' and '{r}'")


def validate_code(rows: Sequence[IndexTuple], d: int) -> Validation:
    """
    Check that every pair of rows is at index-distance >= d.

    Returns the first violating pair (in the given row order) and its
    distance, so duplicated rows come back as a pair at distance 0.
    """
    rows = list(rows)
    if len(rows) < 2:
        return Validation(True)
    _check_shapes(rows)
    l = rows[0].l
    arr = rows_array(rows)
    for i in range(len(rows) - 1):
        dist = distances_to(arr[i], arr[i + 1:], l)
        bad = np.flatnonzero(dist < d)
        if bad.size:
            j = i + 1 + int(bad[0])
            return Validation(False, (rows[i], rows[j]), int(dist[bad[0]]))
    return Validation(True)


def min_index_distance(rows: Sequence[IndexTuple]) -> Optional[int]:
    """D_I of a set of rows; None for fewer than two rows."""
    rows = sorted(set(rows))
    if len(rows) < 2:
        return None
    _check_shapes(rows)
    arr = rows_array(rows)
    l = rows[0].l
    return int(min(distances_to(arr[i], arr[i + 1:], l).min() for i in range(len(rows) - 1)))


@dataclass(frozen=True)
class IndexCode:
    """An (l, M, d) index-correcting code. Rows are stored sorted and deduplicated."""
    l: int
    M: int
    d: int
    rows: Tuple[IndexTuple, ...]

    def __post_init__(self):
        if self.d < 0:
            raise InvalidParams(f"d must be >= 0, got {self.d}")
        for r in self.rows:
            if r.l != self.l or r.M != self.M:
                raise ParamMismatch(f"row '{r}' does not have l={self.l}, M={self.M}")
        object.__setattr__(self, "rows", tuple(sorted(set(self.rows))))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[IndexTuple]:
        return iter(self.rows)

    def validate(self) -> Validation:
        return validate_code(self.rows, self.d)

    def require_valid(self) -> "IndexCode":
        result = self.validate()
        if not result.valid:
            a, b = result.pair
            raise InvalidCode(
                f"rows '{a}' and '{b}' are at index-distance {result.distance} < d={self.d}"
            )
        return self
