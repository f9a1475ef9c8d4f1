"""
Configuration and settings management.
"""

from .settings import settings

__all__ = ["settings"]
