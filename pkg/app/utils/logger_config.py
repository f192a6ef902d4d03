"""Logging configuration module using Rich."""

import logging

from rich.console import Console
from rich.logging import RichHandler

from app.core.settings import settings


def setup_logging(level: str | None = None):
    """Route every log record to a RichHandler on stderr; stdout carries only artifacts."""
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)],
        force=True,
    )


logger = logging.getLogger("psi_hilfer")
