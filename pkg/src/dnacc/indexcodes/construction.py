"""Index-code constructions: coset blocks of a linear inner code, and bit extension."""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from itertools import chain, permutations, product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..core.errors import BudgetExceeded, InvalidInner, InvalidParams, NotPowerOfTwo, OverlapWindow
from ..core.settings import resolve_cap
from ..models.schemas import ConstructionReport
from ..primitives import BitVector
from .linear import Coset, LinearInnerCode, coset_partition
from .tuples import IndexCode, IndexTuple, distances_to, rows_array

logger = logging.getLogger(__name__)


def log2_exact(M: int) -> int:
    if M < 2 or M & (M - 1):
        raise NotPowerOfTwo(f"M must be a power of two >= 2, got {M}")
    return M.bit_length() - 1


def _base_rows(cosets: List[Coset]) -> List[IndexTuple]:
    """Every row whose A-entry blocks are permutations of the cosets, block i over coset i."""
    blocks = [permutations(c.members) for c in cosets]
    return [IndexTuple(tuple(chain.from_iterable(choice))) for choice in product(*blocks)]


def _swap(row: IndexTuple, i: int, j: int) -> IndexTuple:
    entries = list(row.entries)
    entries[i], entries[j] = entries[j], entries[i]
    return IndexTuple(tuple(entries))


def construct_coset(
    M: int, d: int, inner: LinearInnerCode, cap: Optional[int] = None
) -> Tuple[IndexCode, ConstructionReport]:
    """
    Build an (log2 M, M, d) index code from the cosets of `inner`.

    Base rows place a permutation of coset i in block i, for every choice of
    permutations. Extra rows start from a base row that has the zero word at
    position 0 and a kept word c' of coset i (weight >= d) at the first
    position of block i, and swap the two. Each extra row is checked against
    everything accepted so far and dropped if it comes closer than d.
    """
    l = log2_exact(M)
    if d < 1:
        raise InvalidParams(f"d must be >= 1, got {d}")
    if inner.length != l:
        raise InvalidInner(f"inner code has length {inner.length}, need log2(M) = {l}")
    if inner.min_distance < d:
        raise InvalidInner(f"inner code distance {inner.min_distance} is below d={d}")

    cap = resolve_cap(cap, "construction_rows")
    A = inner.size
    cosets = coset_partition(inner)
    q = len(cosets)
    base_count = math.factorial(A) ** q
    if base_count > cap:
        raise BudgetExceeded("coset construction rows", base_count, cap)

    base = _base_rows(cosets)
    zero = BitVector.zeros(l)
    kept: Dict[int, List[BitVector]] = {
        i: [c for c in coset.members if c.weight >= d] for i, coset in enumerate(cosets) if i > 0
    }
    text_rule = sum(1 for coset in cosets[1:] for c in coset.members if c.weight > d)
    kept_total = sum(len(v) for v in kept.values())

    candidates = []
    for row in base:
        if row.entries[0] != zero:
            continue
        for i, keepers in kept.items():
            if row.entries[i * A] in keepers:
                candidates.append(_swap(row, 0, i * A))
    candidates.sort()

    accepted = rows_array(base)
    extra: List[IndexTuple] = []
    dropped: List[IndexTuple] = []
    for cand in candidates:
        row = np.array(cand.values(), dtype=np.int64)
        if distances_to(row, accepted, l).min() >= d:
            extra.append(cand)
            accepted = np.vstack([accepted, row])
        else:
            dropped.append(cand)

    target = base_count + Fraction(kept_total * base_count, A * A)
    code = IndexCode(l, M, d, tuple(base + extra))
    notes = []
    if dropped:
        logger.warning(f"dropped {len(dropped)} of {len(candidates)} extra rows closer than d={d}")
    if text_rule != kept_total:
        notes.append(
            f"keeping only words of weight > d would leave {text_rule} swap words instead of {kept_total}"
        )
        logger.info(notes[-1])
    if code.size != target:
        notes.append(f"validated size {code.size} differs from the counting target {target}")
        logger.warning(notes[-1])

    report = ConstructionReport(
        M=M,
        d=d,
        inner=inner.name,
        inner_size=A,
        cosets=q,
        base_rows=len(base),
        kept_per_coset={str(cosets[i].leader): [str(c) for c in v] for i, v in kept.items()},
        candidate_rows=len(candidates),
        augmented_rows=len(extra),
        dropped_rows=[str(r) for r in dropped],
        target_size=str(target),
        achieved_size=code.size,
        notes=notes,
    )
    logger.info(f"coset construction M={M} d={d} ({inner.name}): {len(base)} base + {len(extra)} extra rows")
    return code, report


def _flip_entry(row: IndexTuple, j: int, mask: BitVector) -> IndexTuple:
    entries = list(row.entries)
    entries[j] = entries[j] ^ mask
    return IndexTuple(tuple(entries))


def extension_steps(code: IndexCode) -> Iterator[IndexCode]:
    """
    The extended codes after each step: zero-padding, then one step per column.

    With w = ceil(d/2), every entry gets w zero bits on the right. Step j then
    adds a copy of every row with entry j complemented in its first w and last
    w bits, doubling the code.
    """
    if code.d < 1:
        raise InvalidParams(f"extension needs d >= 1, got {code.d}")
    w = (code.d + 1) // 2
    if w > code.l:
        raise OverlapWindow(f"window ceil(d/2)={w} exceeds l={code.l}")
    l2 = code.l + w
    ones = (1 << w) - 1
    mask = BitVector(l2, (ones << (l2 - w)) | ones)

    rows = [IndexTuple(tuple(e.pad_right(w) for e in r.entries)) for r in code.rows]
    yield IndexCode(l2, code.M, code.d, tuple(rows))
    for j in range(code.M):
        rows = rows + [_flip_entry(r, j, mask) for r in rows]
        yield IndexCode(l2, code.M, code.d, tuple(rows))


def construct_extend(code: IndexCode) -> IndexCode:
    """An (l + ceil(d/2), M, d) code with 2^M times as many rows."""
    extended = code
    for extended in extension_steps(code):
        pass
    logger.info(f"extended ({code.l},{code.M},{code.d}) code: {code.size} -> {extended.size} rows")
    return extended
