"""Parameters of the (tau, e_i, e_d)_K channel and its outputs."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Tuple, Union

from ..core.errors import InvalidParams
from ..primitives import Strand


class Regime(str, Enum):
    TAU1 = "tau1"   # tau = 1
    HIGH = "high"   # K/2 <= floor(tau K) < K
    LOW = "low"     # floor(tau K) < K/2


@dataclass(frozen=True)
class ChannelParams:
    tau: Fraction
    e_i: int
    e_d: int
    K: int

    def __post_init__(self):
        tau = Fraction(self.tau)
        object.__setattr__(self, "tau", tau)
        if not 0 <= tau <= 1:
            raise InvalidParams(f"tau must lie in [0, 1], got {tau}")
        if self.K < 1:
            raise InvalidParams(f"K must be >= 1, got {self.K}")
        if self.e_i < 0 or self.e_d < 0:
            raise InvalidParams("error radii must be non-negative")

    @classmethod
    def parse(cls, tau: Union[str, Fraction, int], e_i: int, e_d: int, K: int) -> "ChannelParams":
        try:
            value = Fraction(tau)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidParams(f"cannot read tau={tau!r} as a rational") from e
        return cls(value, e_i, e_d, K)

    @property
    def max_erroneous(self) -> int:
        """floor(tau K), exact."""
        return math.floor(self.tau * self.K)

    @property
    def regime(self) -> Regime:
        if self.tau == 1:
            return Regime.TAU1
        if 2 * self.max_erroneous >= self.K:
            return Regime.HIGH
        return Regime.LOW

    def __str__(self) -> str:
        return f"(tau={self.tau}, e_i={self.e_i}, e_d={self.e_d})_K={self.K}"


@dataclass(frozen=True, order=True)
class ReadPool:
    """Canonical multiset of reads: (strand, multiplicity) pairs in ascending strand order."""
    reads: Tuple[Tuple[Strand, int], ...]

    @classmethod
    def from_reads(cls, reads: Iterable[Strand]) -> "ReadPool":
        return cls.from_counter(Counter(reads))

    @classmethod
    def from_counter(cls, counts: Counter) -> "ReadPool":
        return cls(tuple(sorted((s, c) for s, c in counts.items() if c > 0)))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.reads)

    def counter(self) -> Counter:
        return Counter(dict(self.reads))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{s}x{c}" for s, c in self.reads) + "}"
