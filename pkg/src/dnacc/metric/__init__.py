"""DNA-distance, index-distance, balls and Hall witnesses."""
from .ball import ball
from .distance import code_dna_distance, distance_breakdown, dna_distance, index_distance
from .matching import BipartiteMatcher, Matching, bottleneck_matching, hall_violating_set, neighbourhood
from .values import (
    INF,
    DnaDistanceValue,
    Infinite,
    distance_le,
    exceeds,
    format_distance,
    is_finite,
    minimum,
    saturating_add,
    to_json_value,
)

__all__ = [
    "ball", "code_dna_distance", "distance_breakdown", "dna_distance", "index_distance",
    "BipartiteMatcher", "Matching", "bottleneck_matching", "hall_violating_set", "neighbourhood",
    "INF", "DnaDistanceValue", "Infinite", "distance_le", "exceeds", "format_distance",
    "is_finite", "minimum", "saturating_add", "to_json_value",
]
