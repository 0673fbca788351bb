"""Exact sizes of the message space and its distinct-data subspace."""
from __future__ import annotations

import math
from itertools import combinations, permutations, product
from typing import Iterator

from ..core.errors import InvalidParams
from .bits import all_words
from .message import Message, Strand, SystemParams


def space_size(params: SystemParams) -> int:
    """|X_{M,L,l}| = C(2^l, M) * 2^{(L-l)M}."""
    return math.comb(1 << params.l, params.M) * (1 << (params.data_length * params.M))


def distinct_space_size(params: SystemParams) -> int:
    """|X̄_{M,L,l}| = C(2^l, M) * C(2^{L-l}, M) * M!; zero when 2^{L-l} < M."""
    return math.comb(1 << params.l, params.M) * math.perm(1 << params.data_length, params.M)


def iter_messages(params: SystemParams, distinct: bool = False) -> Iterator[Message]:
    """Every message of X_{M,L,l} (or of X̄ when `distinct`), in a fixed order.

    Index sets are chosen as ascending combinations, so each message appears once.
    """
    indices = all_words(params.l)
    data = all_words(params.data_length)
    assign = permutations(data, params.M) if distinct else product(data, repeat=params.M)
    assignments = list(assign)
    for chosen in combinations(indices, params.M):
        for fields in assignments:
            yield Message(params, tuple(Strand(i, u) for i, u in zip(chosen, fields)))


def message_redundancy(params: SystemParams, code_size: int) -> float:
    """r(C) = log2|X_{M,L,l}| - log2|C|."""
    if code_size < 1:
        raise InvalidParams(f"code size must be positive, got {code_size}")
    return math.log2(space_size(params)) - math.log2(code_size)
