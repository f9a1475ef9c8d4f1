"""
Logging Configuration

This module provides logging setup utilities for the workbench.
"""

import logging
import sys
from typing import Optional, Union

from ..exceptions import ConfigurationError


def setup_logging(level: Optional[Union[int, str]] = None) -> None:
    """
    Set up logging configuration for the application.

    Reports go to stdout, so log records are written to stderr.

    Args:
        level: Optional logging level (defaults to WARNING if not specified)

    Raises:
        ConfigurationError: If a level name is not a logging level
    """
    if level is None:
        level = logging.WARNING
    if isinstance(level, str):
        resolved = logging.getLevelName(level.strip().upper())
        if not isinstance(resolved, int):
            raise ConfigurationError(f"unknown log level '{level}' (ANN_LOG_LEVEL); use DEBUG, INFO, WARNING, ERROR or CRITICAL")
        level = resolved

    # Create formatter
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # Configure stream handler
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)

    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    root_logger.addHandler(stream_handler)
