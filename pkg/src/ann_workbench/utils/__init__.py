"""
Utilities Module

This module provides various utility functions for the workbench.
"""

from .logging import setup_logging

__all__ = ["setup_logging"]
