"""
Settings for all ENV variables in the application.
"""

from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # --- Infrastructure ---
    ENV: str = "local"
    LOG_LEVEL: str = "INFO"

    RELEASE: str = "0.1.0"
    # --- Sentry Settings ---
    SENTRY_DSN: str | None = None
    # None picks 1.0 locally and 0.2 elsewhere
    SENTRY_TRACES_SAMPLE_RATE: float | None = None

    # --- API Settings ---
    API_HOST: str = "0.0.0.0"
    API_PORT: int = 8000
    API_CORS_ORIGINS: list[str] = ["*"]
    # dense (N+1)^2 weight tables: about 34 MB each at N = 2048
    API_MAX_GRID_SIZE: int = 2048

    # --- Solver defaults (CLI flags and API fields override these) ---
    DEFAULT_GRID_SIZE: int = 512
    DEFAULT_TOLERANCE: float = 1e-10
    DEFAULT_MAX_ITER: int = 200
    DEFAULT_OUTPUT_FORMAT: Literal["csv", "json"] = "csv"

    # --- Psi geometry ---
    # Probe points used to check psi' > 0 and monotonicity on [a, b]
    PSI_PROBE_POINTS: int = 257
    PSI_INVERSION_TOLERANCE: float = 1e-14

    # --- Quadrature ---
    # Number of (alpha, delta, N) weight tables kept in memory
    WEIGHT_CACHE_SIZE: int = 16

    # --- Mittag-Leffler series ---
    ML_MAX_TERMS: int = 400
    ML_MAX_ARGUMENT: float = 50.0
    ML_MIN_ORDER: float = 0.3

    # --- Verification ---
    CONTAINMENT_SLACK: float = 1e-6
    # Leading share of the psi-span skipped by residual and round-trip maxima
    CHECK_CORNER_FRACTION: float = 0.25
    RATE_WINDOW: int = 5

    # Pydantic will find the .env file
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")


# Create a single instance of settings
settings = Settings()
