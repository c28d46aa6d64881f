"""Activity definitions for the distributed fuzz sweep"""

from .differential_activity import differential_batch_activity

__all__ = [
    "differential_batch_activity",
]
