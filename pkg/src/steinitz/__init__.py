"""
Steinitz rearrangement and prefix-collision search
"""

from .rearrangement import steinitz_permute, prefix_deviation, as_vectors
from .collision import prefix_collision

__all__ = ["steinitz_permute", "prefix_deviation", "prefix_collision", "as_vectors"]
