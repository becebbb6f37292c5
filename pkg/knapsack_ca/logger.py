import logging
import os
import sys

LOG_LEVEL_ENV = "KNAPSACK_CA_LOG_LEVEL"

_configured: set[str] = set()


def setup_logger(name: str = "knapsack_ca") -> logging.Logger:
    """
    Configure and return a logger for the solver, oracle and bench modules.

    Diagnostics go to stderr; stdout is reserved for results printed by the CLI.
    """
    logger = logging.getLogger(name)
    logger.setLevel(os.environ.get(LOG_LEVEL_ENV, "INFO").upper())

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        logger.addHandler(handler)

    _configured.add(name)
    return logger


def set_level(level: int | str) -> None:
    """Apply a level to every logger created through setup_logger (used by --verbose)."""
    for name in _configured:
        logging.getLogger(name).setLevel(level)
