"""
kapoly - Explicit A-polynomials of the two-bridge knots C(2n, 4).

Copyright (c) 2025, Technology Innovation Institute. All rights reserved.

"""
# ==================================================================
# Logging helpers. When the APOLY_DEBUG_STREAM environment variable is
# set, every computation step is traced at DEBUG level.
# ==================================================================

import logging
from os import environ

_ROOT = "kapoly"
_FORMAT = "%(asctime)s [%(name)s] %(levelname)s: %(message)s"


def debug_stream_enabled() -> bool:
    """True when APOLY_DEBUG_STREAM is set to a truthy value."""
    return environ.get("APOLY_DEBUG_STREAM", "False").lower() in ("true", "1", "t")


def get_logger(name: str) -> logging.Logger:
    """Returns the package logger for a module name."""
    if not name.startswith(_ROOT):
        name = f"{_ROOT}.{name}"
    return logging.getLogger(name)


def configure_logging(level="WARNING", stream=None):
    """
    Installs a single stream handler on the package logger.

    Args:
        level (str or int): Level used when the debug stream is off.
        stream: Target stream, stderr by default.
    """
    logger = logging.getLogger(_ROOT)
    if debug_stream_enabled():
        level = logging.DEBUG
    logger.setLevel(level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(_FORMAT))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
