"""DNA-correcting codes for unordered strands with noisy index-fields."""

__version__ = "0.1.0"
