"""
Conformal order, Graver basis engines and Graver decomposition
"""

from .order import conforms, sign_compatible, pairwise_sign_compatible, minimal_elements
from .enumeration import enumerate_box, kernel_points, graver_enumerate
from .completion import kernel_lattice_basis, normal_form, graver_complete
from .decomposition import graver_decompose, orthant_filter, max_multiple

__all__ = [
    "conforms",
    "sign_compatible",
    "pairwise_sign_compatible",
    "minimal_elements",
    "enumerate_box",
    "kernel_points",
    "graver_enumerate",
    "kernel_lattice_basis",
    "normal_form",
    "graver_complete",
    "graver_decompose",
    "orthant_filter",
    "max_multiple",
]
