"""
Structured logging for the qrao package.
"""

import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from qrao.config import Settings

ROOT_LOGGER = "qrao"
_HANDLER_NAME = "qrao-stderr"


def get_logger(name: str) -> logging.Logger:
    """Return a child of the package logger (``qrao.<name>``)."""
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_logging(settings: Optional[Settings] = None) -> logging.Logger:
    """
    Install a single stderr handler on the package logger.

    Calling it again replaces the previous handler, so scripts and the CLI can
    reconfigure freely.

    Args:
        settings: Source of level and format; read from the environment if omitted.

    Returns:
        The configured package logger.
    """
    settings = settings or Settings.from_env()
    logger = logging.getLogger(ROOT_LOGGER)

    for handler in list(logger.handlers):
        if handler.get_name() == _HANDLER_NAME:
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(_HANDLER_NAME)
    if settings.log_format == "json":
        handler.setFormatter(
            jsonlogger.JsonFormatter("%(asctime)s %(levelname)s %(name)s %(message)s")
        )
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)-7s %(name)s: %(message)s")
        )

    logger.addHandler(handler)
    logger.setLevel(settings.log_level)
    logger.propagate = False
    return logger
