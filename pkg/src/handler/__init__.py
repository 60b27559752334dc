# Handlers package
from .scaling_handler import ScalingHandler, SCALING_COLUMNS
from .verification_handler import VerificationHandler

__all__ = ["ScalingHandler", "SCALING_COLUMNS", "VerificationHandler"]
