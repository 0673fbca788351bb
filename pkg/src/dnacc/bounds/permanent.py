"""Exact permanents and the sizes of index-distance balls around a permutation."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.errors import BudgetExceeded, InvalidParams, SizeMismatch
from ..core.settings import resolve_cap
from ..indexcodes.construction import log2_exact
from ..primitives import popcount_array

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """A square 0/1 matrix."""
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise SizeMismatch(f"matrix must be square, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise InvalidParams("matrix entries must be 0 or 1")
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryMatrix) and np.array_equal(self.entries, other.entries)


def permanent(A: BinaryMatrix, cap: Optional[int] = None) -> int:
    """
    per(A) by Ryser's formula, walking column subsets in Gray-code order so
    each step adds or removes one column from the running row sums:

        per(A) = (-1)^n * sum over S of (-1)^|S| * prod_i sum_{j in S} a_ij

    Products are taken over Python ints, so the result is exact.
    """
    cap = resolve_cap(cap, "permanent_dimension")
    n = A.n
    if n > cap:
        raise BudgetExceeded("permanent dimension", n, cap)
    if n == 0:
        return 1

    columns = A.entries.T
    rowsums = np.zeros(n, dtype=np.int64)
    total = 0
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            rowsums += columns[j]
        else:
            rowsums -= columns[j]
        term = math.prod(rowsums.tolist())
        if term:
            total += -term if bin(gray).count("1") & 1 else term
    return -total if n & 1 else total


def build_A(r: int, M: int) -> BinaryMatrix:
    """A_{r,M}: rows and columns indexed by {0,1}^{log2 M}; 1 where the words are within distance r."""
    l = log2_exact(M)
    words = np.arange(M, dtype=np.int64)
    distances = popcount_array(words[:, None] ^ words[None, :], l)
    return BinaryMatrix((distances <= r).astype(np.int64))


def ball_size_B(r: int, M: int, cap: Optional[int] = None) -> int:
    """Number of permutations f of {0,1}^{log2 M} with D_I(Id, f) <= r."""
    size = permanent(build_A(r, M), cap)
    logger.debug(f"B_{{{r},{M}}} = {size}")
    return size
