"""Counting and bounds for index codes and the distinct-data space."""
from .observation import A_U_size, exact_F
from .packing import (
    construction_size,
    extension_lower_bound,
    packing_radius_count,
    singleton_bound,
    sphere_packing_bound,
)
from .permanent import BinaryMatrix, ball_size_B, build_A, permanent
from .redundancy import redundancy_distinct

__all__ = [
    "A_U_size", "exact_F",
    "construction_size", "extension_lower_bound", "packing_radius_count",
    "singleton_bound", "sphere_packing_bound",
    "BinaryMatrix", "ball_size_B", "build_A", "permanent",
    "redundancy_distinct",
]
