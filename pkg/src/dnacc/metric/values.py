"""DNA-distance values: a finite integer or the distinguished value INF."""
from enum import Enum
from typing import Iterable, Union


class Infinite(Enum):
    INF = "inf"

    def __str__(self) -> str:
        return "inf"


INF = Infinite.INF

DnaDistanceValue = Union[int, Infinite]


def is_finite(value: DnaDistanceValue) -> bool:
    return value is not INF


def exceeds(value: DnaDistanceValue, bound: int) -> bool:
    """value > bound, with INF above every integer."""
    return not is_finite(value) or value > bound


def distance_le(a: DnaDistanceValue, b: DnaDistanceValue) -> bool:
    if b is INF:
        return True
    if a is INF:
        return False
    return a <= b


def saturating_add(a: DnaDistanceValue, b: DnaDistanceValue) -> DnaDistanceValue:
    if a is INF or b is INF:
        return INF
    return a + b


def minimum(values: Iterable[DnaDistanceValue]) -> DnaDistanceValue:
    finite = [v for v in values if is_finite(v)]
    return min(finite) if finite else INF


def format_distance(value: DnaDistanceValue) -> str:
    return str(value)


def to_json_value(value: DnaDistanceValue) -> Union[int, str]:
    return value if is_finite(value) else "inf"
