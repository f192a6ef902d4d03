"""
JSON artifacts written by the CLI.

Non-finite floats (z at x_0 when gamma < 1) serialize as null.
"""

from pydantic import BaseModel


class RunHeader(BaseModel):
    command: str
    problem: str
    alpha: float
    beta: float
    gamma: float
    n: int
    tol: float


class SolutionArtifact(BaseModel):
    """Output of `solve`; readable back as a reference solution."""

    header: RunHeader
    status: str
    converged: bool
    iterations: int
    final_delta: float
    certified: bool
    q: float | None = None
    a_posteriori_bound: float | None = None
    residual: float | None = None
    x: list[float]
    psi_x: list[float]
    r: list[float]
    z: list[float | None]


class CertificateArtifact(BaseModel):
    header: RunHeader
    p: float
    q: float
    q_variant_alt: float
    unique: bool


class ContainmentArtifact(BaseModel):
    """Output of `bound` (magnitude = |z|) and `depend` (magnitude = |z - v|)."""

    header: RunHeader
    kind: str
    prefactor: float
    measured_eps: float | None = None
    all_contained: bool
    x: list[float]
    magnitude: list[float | None]
    bound: list[float]
    contained: list[bool | None]


class VerifyRow(BaseModel):
    n: int
    iterations: int
    residual: float
    round_trip: float


class VerifyArtifact(BaseModel):
    header: RunHeader
    rows: list[VerifyRow]
    residual_ratio: float | None
    round_trip_ratio: float | None
