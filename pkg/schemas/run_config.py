"""Validated configuration of one CLI run."""

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        __format__ = str.__format__
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, model_validator

from app.core.settings import settings


class Command(StrEnum):
    SOLVE = "solve"
    CERTIFY = "certify"
    BOUND = "bound"
    DEPEND = "depend"
    VERIFY = "verify"


class RunConfig(BaseModel):
    """
    One invocation of the command-line tool.

    `output=None` writes to standard output. `eps` overrides the measured mismatch for `depend`.
    """

    command: Command
    problem_path: Path
    perturbed_path: Path | None = None
    n: int = Field(default_factory=lambda: settings.DEFAULT_GRID_SIZE, ge=2)
    tol: float = Field(default_factory=lambda: settings.DEFAULT_TOLERANCE, gt=0.0)
    max_iter: int = Field(default_factory=lambda: settings.DEFAULT_MAX_ITER, ge=1)
    output: Path | None = None
    format: Literal["csv", "json"] = Field(default_factory=lambda: settings.DEFAULT_OUTPUT_FORMAT)
    eps: float | None = Field(default=None, gt=0.0)
    verbose: bool = False

    @model_validator(mode="after")
    def check_perturbed(self) -> "RunConfig":
        if self.command is Command.DEPEND and self.perturbed_path is None:
            raise ValueError("depend requires --perturbed")
        return self
