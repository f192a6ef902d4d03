"""Sentry error reporting for the solver processes."""

from typing import Literal

import sentry_sdk
from sentry_sdk.integrations.fastapi import FastApiIntegration
from sentry_sdk.integrations.starlette import StarletteIntegration

from app.core.settings import settings
from app.utils.logger_config import logger

ServiceName = Literal["api", "cli"]


def _integrations(service_name: ServiceName) -> list:
    # the CLI never imports starlette routes
    if service_name == "api":
        return [StarletteIntegration(), FastApiIntegration()]
    return []


def init_sentry(service_name: ServiceName) -> bool:
    """
    Initialize Sentry once per process when SENTRY_DSN is configured.

    Events are tagged with the service ("api" or "cli") and the package release.
    Returns True when Sentry was initialized.
    """
    if not settings.SENTRY_DSN:
        logger.debug("sentry: SENTRY_DSN is not set, error reporting disabled")
        return False

    sample_rate = settings.SENTRY_TRACES_SAMPLE_RATE
    if sample_rate is None:
        sample_rate = 1.0 if settings.ENV == "local" else 0.2

    sentry_sdk.init(
        dsn=settings.SENTRY_DSN,
        environment=settings.ENV,
        release=f"psi-hilfer-solver@{settings.RELEASE}",
        traces_sample_rate=sample_rate if service_name == "api" else 0.0,
        send_default_pii=False,
        integrations=_integrations(service_name),
    )
    sentry_sdk.set_tag("service", service_name)
    return True
