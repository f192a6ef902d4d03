"""Startup and shutdown of the solver API."""

from contextlib import asynccontextmanager

from fastapi import FastAPI

from app.core.settings import settings
from app.utils.logger_config import logger
from fractional.operators.quadrature import clear_weight_cache


@asynccontextmanager
async def lifespan_handler(_app: FastAPI):
    """Quadrature weight tables are cached per process; drop them when the app stops."""
    logger.info("api: starting (env=%s, default N=%d)", settings.ENV, settings.DEFAULT_GRID_SIZE)
    yield
    logger.info("api: shutting down, clearing %d cached weight tables", clear_weight_cache())
