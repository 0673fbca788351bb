"""From index codes to DNA-correcting codes over distinct data-fields."""
from __future__ import annotations

from typing import List, Sequence

from ..core.errors import DuplicateData, LengthMismatch, WrongCount
from ..primitives import BitVector, Message, Strand, SystemParams, make_message
from .tuples import IndexCode


def messages_from_code(code: IndexCode, U: Sequence[BitVector]) -> List[Message]:
    """Row (ind_1..ind_M) becomes the message {(ind_i, u_i)}; D(result) equals D_I(code)."""
    U = list(U)
    if len(U) != code.M:
        raise WrongCount(f"need {code.M} data-fields, got {len(U)}")
    if len({u.length for u in U}) != 1:
        raise LengthMismatch("data-fields differ in length")
    if len(set(U)) != len(U):
        raise DuplicateData("data-fields must be pairwise distinct")
    params = SystemParams(code.M, code.l + U[0].length, code.l)
    return sorted(
        make_message(params, (Strand(i, u) for i, u in zip(row.entries, U))) for row in code.rows
    )
