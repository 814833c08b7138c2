"""Logging set-up driven by the MOTR_LOG environment variable."""

from __future__ import annotations
import logging
import os

LEVELS = {
    "quiet": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str | None = None) -> int:
    """
    Configure the `src` logger from `level` or $MOTR_LOG.

    Returns the numeric level that was installed. Calling it again replaces
    the handler instead of stacking a second one.
    """
    name = (level or os.environ.get("MOTR_LOG", "info")).strip().lower()
    numeric = LEVELS.get(name)

    logger = logging.getLogger("src")
    for handler in list(logger.handlers):
        if getattr(handler, "_motr", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._motr = True  # type: ignore[attr-defined]
    logger.addHandler(handler)
    logger.setLevel(numeric if numeric is not None else logging.INFO)
    logger.propagate = False

    if numeric is None:
        logger.warning("unknown MOTR_LOG value %r, using 'info'", name)
        numeric = logging.INFO
    return numeric
