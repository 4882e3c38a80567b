"""
Managers package for the rating engine.

This package contains validation and numerical helper managers that services
delegate to for invariant checks and spectral estimates.
"""

from .validation_manager import ValidationManager, ATOL
from .spectral_manager import SpectralManager

__all__ = [
    "ValidationManager",
    "SpectralManager",
    "ATOL"
]
