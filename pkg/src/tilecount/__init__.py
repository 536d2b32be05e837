"""Counting and enumerating translational tilings of intervals and boxes."""
from .core import BoxShape, PointSet, TilingError, TilingPair, is_valid_tiling
from .counting import count_full, count_ie, total_count
from .enumeration import enumerate_interval
from .multidim import count_box_total
from .oracle import brute_force_tilings

__all__ = [
    "BoxShape",
    "PointSet",
    "TilingError",
    "TilingPair",
    "brute_force_tilings",
    "count_box_total",
    "count_full",
    "count_ie",
    "enumerate_interval",
    "is_valid_tiling",
    "total_count",
]
__version__ = "0.1.0"
