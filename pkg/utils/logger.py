"""
Logging for Frobenius Lab.

Every module logger hangs under the "frobenius_lab" namespace and shares one
stderr handler, so command results on stdout never interleave with diagnostics.
"""
import logging
import sys
from typing import Optional, Union

from utils.config import SETTINGS

ROOT_LOGGER = "frobenius_lab"
LOG_FORMAT = "[%(asctime)s] [%(levelname)s] %(name)s - %(message)s"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
HANDLER_NAME = "frobenius_lab.stderr"


def _project_root() -> logging.Logger:
    root = logging.getLogger(ROOT_LOGGER)
    if not any(h.get_name() == HANDLER_NAME for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.set_name(HANDLER_NAME)
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
        root.addHandler(handler)
        root.setLevel(getattr(logging, SETTINGS.log_level, logging.WARNING))
        root.propagate = False
    return root


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Return the project logger for `name` ("algebra.groebner" -> "frobenius_lab.algebra.groebner")."""
    root = _project_root()
    if not name or name == ROOT_LOGGER:
        return root
    if not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    return logging.getLogger(name)


def set_level(level: Union[int, str]) -> None:
    """Change the verbosity of every project logger at once."""
    if isinstance(level, str):
        if level.upper() not in LEVELS:
            raise ValueError(f"unknown log level {level!r}; expected one of {', '.join(LEVELS)}")
        level = getattr(logging, level.upper())
    _project_root().setLevel(level)
