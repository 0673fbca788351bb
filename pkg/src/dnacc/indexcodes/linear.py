"""Binary linear inner codes and their cosets."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Tuple

from ..core.errors import InvalidInner, LengthMismatch, NotLinear
from ..primitives import BitVector, all_words, popcount

logger = logging.getLogger(__name__)


def _span(length: int, generators: Iterable[int]) -> FrozenSet[int]:
    words = {0}
    for g in generators:
        words |= {w ^ g for w in words}
    return frozenset(words)


@dataclass(frozen=True)
class LinearInnerCode:
    """A binary linear code of the given length, spanned by `generators`."""
    length: int
    generators: Tuple[BitVector, ...]
    name: str = "linear"
    codewords: FrozenSet[BitVector] = field(init=False, compare=False, repr=False)
    min_distance: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.length < 1:
            raise InvalidInner(f"inner code length must be >= 1, got {self.length}")
        for g in self.generators:
            if g.length != self.length:
                raise LengthMismatch(f"generator {g} is not {self.length} bits long")
        span = _span(self.length, (g.value for g in self.generators))
        object.__setattr__(self, "codewords", frozenset(BitVector(self.length, w) for w in span))
        nonzero = [popcount(w) for w in span if w]
        # a zero-dimensional code separates nothing, so its distance exceeds every word length
        object.__setattr__(self, "min_distance", min(nonzero) if nonzero else self.length + 1)

    @classmethod
    def from_codewords(cls, words: Iterable[BitVector], name: str = "linear") -> "LinearInnerCode":
        words = set(words)
        if not words:
            raise NotLinear("a linear code holds at least the zero word")
        lengths = {w.length for w in words}
        if len(lengths) != 1:
            raise LengthMismatch(f"codewords have lengths {sorted(lengths)}")
        length = lengths.pop()
        values = {w.value for w in words}
        if 0 not in values:
            raise NotLinear("the zero word is missing")
        basis: List[int] = []
        for v in sorted(values):
            if v not in _span(length, basis):
                basis.append(v)
        if _span(length, basis) != values:
            raise NotLinear(f"{len(values)} words are not closed under addition")
        return cls(length, tuple(BitVector(length, v) for v in basis), name)

    @property
    def size(self) -> int:
        return len(self.codewords)

    @property
    def dimension(self) -> int:
        return self.size.bit_length() - 1

    def __contains__(self, word: BitVector) -> bool:
        return word in self.codewords


def parity_code(length: int) -> LinearInnerCode:
    """All even-weight words; distance 2."""
    if length < 2:
        raise InvalidInner(f"a parity code needs length >= 2, got {length}")
    generators = tuple(BitVector(length, 0b11 << i) for i in range(length - 1))
    return LinearInnerCode(length, generators, "parity")


def repetition_code(length: int) -> LinearInnerCode:
    """{0^n, 1^n}; distance n."""
    return LinearInnerCode(length, (BitVector(length, (1 << length) - 1),), "repetition")


def hamming_code(m: int) -> LinearInnerCode:
    """The [2^m - 1, 2^m - 1 - m, 3] Hamming code.

    A word is a codeword when the XOR of the (1-based) positions of its ones is zero.
    """
    if m < 2:
        raise InvalidInner(f"Hamming codes need m >= 2, got {m}")
    length = (1 << m) - 1

    def syndrome(word: BitVector) -> int:
        s = 0
        for pos, bit in enumerate(str(word), start=1):
            if bit == "1":
                s ^= pos
        return s

    codewords = [w for w in all_words(length) if syndrome(w) == 0]
    return LinearInnerCode.from_codewords(codewords, "hamming")


def inner_code_by_name(name: str, length: int) -> LinearInnerCode:
    """Inner code of the given bit length: parity, repetition, or hamming."""
    if name == "parity":
        return parity_code(length)
    if name == "repetition":
        return repetition_code(length)
    if name == "hamming":
        m = (length + 1).bit_length() - 1
        if (1 << m) - 1 != length:
            raise InvalidInner(f"no Hamming code of length {length}")
        return hamming_code(m)
    raise InvalidInner(f"unknown inner code {name!r}")


@dataclass(frozen=True)
class Coset:
    leader: BitVector
    members: Tuple[BitVector, ...]


def coset_partition(inner: LinearInnerCode) -> List[Coset]:
    """
    Cosets of the inner code covering {0,1}^length.

    Words are scanned by (weight, value); the first word not yet covered is a
    minimal leader, so the code itself comes first and the rest follow by leader.
    """
    words = sorted(all_words(inner.length), key=lambda w: (w.weight, w.value))
    covered = set()
    cosets = []
    for w in words:
        if w in covered:
            continue
        members = tuple(sorted(w ^ c for c in inner.codewords))
        covered.update(members)
        cosets.append(Coset(w, members))
    logger.debug(f"{inner.name} code: {len(cosets)} cosets of size {inner.size}")
    return cosets
