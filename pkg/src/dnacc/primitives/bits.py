"""Fixed-length binary words.

Bits are stored big-endian in an int: the string "011" is value 3 with
length 3, so lexicographic order on equal-length strings is numeric order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List

import numpy as np

from ..core.errors import InvalidBitVector, LengthMismatch


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, order=True)
class BitVector:
    length: int
    value: int

    def __post_init__(self):
        if self.length < 1:
            raise InvalidBitVector(f"bit length must be >= 1, got {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise InvalidBitVector(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, bits: str) -> "BitVector":
        if not bits or any(c not in "01" for c in bits):
            raise InvalidBitVector(f"not a bit string: {bits!r}")
        return cls(len(bits), int(bits, 2))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BitVector('{self}')"

    @property
    def weight(self) -> int:
        return popcount(self.value)

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_same_length(self, other)
        return BitVector(self.length, self.value ^ other.value)

    def flip(self, positions) -> "BitVector":
        """Complement the given bit positions (0 = leftmost)."""
        mask = 0
        for p in positions:
            mask |= 1 << (self.length - 1 - p)
        return BitVector(self.length, self.value ^ mask)

    def pad_right(self, extra: int) -> "BitVector":
        return BitVector(self.length + extra, self.value << extra)


def _check_same_length(a: BitVector, b: BitVector) -> None:
    if a.length != b.length:
        raise LengthMismatch(f"bit lengths differ: {a.length} vs {b.length}")


def hamming(a: BitVector, b: BitVector) -> int:
    _check_same_length(a, b)
    return popcount(a.value ^ b.value)


def all_words(length: int) -> List[BitVector]:
    """{0,1}^length in lexicographic order."""
    return [BitVector(length, v) for v in range(1 << length)]


def hamming_ball(center: BitVector, radius: int) -> List[BitVector]:
    """Words within `radius` of `center`, in lexicographic order."""
    radius = max(0, min(radius, center.length))
    words = [
        center.flip(positions)
        for weight in range(radius + 1)
        for positions in combinations(range(center.length), weight)
    ]
    return sorted(words)


def popcount_array(x: np.ndarray, bits: int) -> np.ndarray:
    """Elementwise popcount of non-negative integers below 2**bits."""
    x = np.asarray(x, dtype=np.int64)
    counts = np.zeros_like(x)
    for b in range(bits):
        counts += (x >> b) & 1
    return counts
