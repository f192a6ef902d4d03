"""Types for solver API requests and responses."""

from pydantic import BaseModel, Field

from app.core.settings import settings
from schemas.problem_file import ProblemFile


class SolveRequest(BaseModel):
    """
    Request model for the '/v1/solve' route.
    The problem is inlined with the same schema as a problem file.
    """

    problem: ProblemFile
    n: int = Field(default_factory=lambda: settings.DEFAULT_GRID_SIZE, ge=2, le=settings.API_MAX_GRID_SIZE)
    tol: float = Field(default_factory=lambda: settings.DEFAULT_TOLERANCE, gt=0.0)
    max_iter: int = Field(default_factory=lambda: settings.DEFAULT_MAX_ITER, ge=1)
    with_residual: bool = False


# ----
class SolveResponse(BaseModel):
    """
    Response model for the '/v1/solve' route.
    Non-convergence is reported with converged=false, not as an error.
    """

    problem: str
    converged: bool
    iterations: int
    final_delta: float
    certified: bool
    q: float | None = None
    residual: float | None = None
    nodes: list[float]
    r: list[float]
    z: list[float | None]


class CertifyRequest(BaseModel):
    problem: ProblemFile
    n: int = Field(default_factory=lambda: settings.DEFAULT_GRID_SIZE, ge=2, le=settings.API_MAX_GRID_SIZE)


class CertifyResponse(BaseModel):
    problem: str
    p: float
    q: float
    q_variant_alt: float
    unique: bool
