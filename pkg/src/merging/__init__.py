"""
Merging partitioners for bounded integer sequences
"""

from .partition import merge_1d, merge_kd, verify_partition, measured_constant

__all__ = ["merge_1d", "merge_kd", "verify_partition", "measured_constant"]
