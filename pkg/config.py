"""Process bootstrap shared by the CLI and the API.

This module provides:
    - loading of the .env file into the environment
    - Rich logging configuration
    - optional Sentry initialization per service

Settings are read once at import time of `app.core.settings`, so `.env`
is loaded here before anything else pulls them in.
"""

from typing import Literal

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from app.core.sentry_config import init_sentry  # noqa: E402
from app.utils.logger_config import logger, setup_logging  # noqa: E402


def bootstrap(service_name: Literal["api", "cli"], verbose: bool = False) -> None:
    """Execute once when a process starts.

    Steps:
        1. Configure logging (DEBUG when verbose)
        2. Initialize Sentry if a DSN is configured
    """
    # 1. Logging
    setup_logging("DEBUG" if verbose else None)

    # 2. Sentry
    if init_sentry(service_name=service_name):
        logger.info("%s: Sentry initialized", service_name)
