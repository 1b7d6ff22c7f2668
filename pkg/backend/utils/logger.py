"""
KochLab Logging Framework

Centralized logging configuration for the library and the CLI.
Provides consistent formatting and structured context fields.

Usage:
    from backend.utils.logger import get_logger
    logger = get_logger(__name__)

    logger.debug("Link table built", p=3, primes=[7, 31, 229])
    logger.warning("Checker skipped", rule="sl2_conditions", reason="p <= 3")

All output goes to stderr; stdout is reserved for reports.
"""

import logging
import os
import sys
from typing import Any, Dict, Optional


# =============================================================================
# Log Level Constants
# =============================================================================

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

ROOT_LOGGER_NAME = "kochlab"


# =============================================================================
# Custom Formatter with Context Support
# =============================================================================

class KochLabFormatter(logging.Formatter):
    """
    Formatter that adds:
    - file location (file:func:line)
    - structured context fields rendered as key=value
    - optional ANSI colours for terminals
    """

    COLORS = {
        "DEBUG": "\033[36m",     # Cyan
        "INFO": "\033[32m",      # Green
        "WARNING": "\033[33m",   # Yellow
        "ERROR": "\033[31m",     # Red
        "CRITICAL": "\033[35m",  # Magenta
        "RESET": "\033[0m",
    }

    def __init__(self, fmt: str, datefmt: Optional[str] = None, use_colors: bool = False):
        super().__init__(fmt, datefmt)
        self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        if not getattr(record, "location", None):
            filename = os.path.basename(record.pathname) if record.pathname else "unknown"
            record.location = f"{filename}:{record.funcName}:{record.lineno}"

        context = getattr(record, "context", None) or {}
        parts = [f"{key}={value}" for key, value in context.items()]
        record.context_str = " | " + " ".join(parts) if parts else ""

        if self.use_colors and record.levelname in self.COLORS:
            record.levelname_colored = (
                f"{self.COLORS[record.levelname]}{record.levelname:8}{self.COLORS['RESET']}"
            )
        else:
            record.levelname_colored = f"{record.levelname:8}"

        return super().format(record)


# =============================================================================
# Context-Aware Logger
# =============================================================================

class KochLabLogger(logging.LoggerAdapter):
    """
    Logger adapter that supports structured context logging.

    Example:
        logger.debug("Relator evaluated", index=1, omega=2)
        # 2026-01-04 12:00:00 | DEBUG    | koch.py:verify_presentation:88 | Relator evaluated | index=1 omega=2
    """

    _STANDARD_KEYS = {"exc_info", "stack_info", "stacklevel", "extra"}

    def __init__(self, logger: logging.Logger, extra: Optional[Dict[str, Any]] = None):
        super().__init__(logger, extra or {})

    def process(self, msg: str, kwargs: Dict[str, Any]) -> tuple:
        context: Dict[str, Any] = {}
        extra = kwargs.get("extra", {})

        for key in list(kwargs.keys()):
            if key not in self._STANDARD_KEYS:
                context[key] = kwargs.pop(key)

        context.update(self.extra)
        extra["context"] = context
        kwargs["extra"] = extra
        return msg, kwargs


# =============================================================================
# Logger Factory
# =============================================================================

_initialized = False
_log_level: int = logging.WARNING


def configure_logging(log_level: str = "WARNING", use_colors: Optional[bool] = None) -> None:
    """
    Configure the logging system. Later calls only adjust the level.

    Args:
        log_level: Minimum log level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
            Unknown names fall back to WARNING.
        use_colors: Colour the level name; defaults to whether stderr is a TTY.
    """
    global _initialized, _log_level

    _log_level = LOG_LEVELS.get(str(log_level).upper(), logging.WARNING)
    root = logging.getLogger(ROOT_LOGGER_NAME)

    if _initialized:
        root.setLevel(_log_level)
        return

    if use_colors is None:
        use_colors = hasattr(sys.stderr, "isatty") and sys.stderr.isatty()

    root.setLevel(_log_level)
    root.handlers.clear()
    root.propagate = False

    console_format = "%(asctime)s | %(levelname_colored)s | %(location)s | %(message)s%(context_str)s"
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        KochLabFormatter(console_format, datefmt="%Y-%m-%d %H:%M:%S", use_colors=use_colors)
    )
    root.addHandler(handler)

    _initialized = True


def get_logger(name: Optional[str] = None) -> KochLabLogger:
    """
    Get a logger for the given module.

    Args:
        name: Module name (usually __name__).

    Returns:
        KochLabLogger with context support, e.g. "backend.kochlab.koch" -> "kochlab.koch".
    """
    if not _initialized:
        configure_logging(os.getenv("LOG_LEVEL", "WARNING"))

    if name:
        if name.startswith("backend."):
            name = name[len("backend."):]
        logger_name = name if name.startswith(ROOT_LOGGER_NAME) else f"{ROOT_LOGGER_NAME}.{name}"
    else:
        logger_name = ROOT_LOGGER_NAME

    return KochLabLogger(logging.getLogger(logger_name))


__all__ = [
    "configure_logging",
    "get_logger",
    "KochLabLogger",
    "KochLabFormatter",
    "LOG_LEVELS",
]
