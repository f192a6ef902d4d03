"""Problem definition file (JSON or TOML)."""

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from fractional.errors import InvalidInputError
from fractional.problem.catalog import Coefficient, constant_coefficient, make_coefficient, make_kernel, make_rhs
from fractional.problem.order import FractionalOrder
from fractional.problem.problem import GrowthCoefficients, IvProblem, LipschitzConstants
from fractional.problem.psi import make_psi

# File keys that are Python keywords in the catalog factories
PARAM_ALIASES = {"lambda": "lam"}


class CatalogSpec(BaseModel):
    """
    `{kind = "...", <numeric params>}` entry resolved through a function catalog.

    Unknown kinds surface as CatalogError when the problem is built.
    """

    model_config = ConfigDict(extra="allow", frozen=True)
    __pydantic_extra__: dict[str, float]

    kind: str

    @property
    def params(self) -> dict[str, float]:
        return {PARAM_ALIASES.get(key, key): value for key, value in (self.model_extra or {}).items()}


CoefficientInput = float | CatalogSpec


def _coefficient(spec: CoefficientInput) -> Coefficient:
    if isinstance(spec, CatalogSpec):
        return make_coefficient(spec.kind, **spec.params)
    return constant_coefficient(float(spec))


class ProblemFile(BaseModel):
    """
    Example (TOML):

        interval = [0.0, 1.0]
        alpha = 0.5
        beta = 1.0
        z_a = 1.0
        q1 = 0.5
        psi = { kind = "linear" }
        f = { kind = "linear", lambda = 0.5, mu = 0.1 }
        w = { kind = "linear-in-z", kappa = 1.0 }
    """

    model_config = ConfigDict(extra="forbid")

    name: str = "problem"
    interval: tuple[float, float]
    alpha: float = Field(gt=0.0, lt=1.0)
    beta: float = Field(ge=0.0, le=1.0)
    z_a: float
    psi: CatalogSpec = Field(default_factory=lambda: CatalogSpec(kind="linear"))
    f: CatalogSpec
    w: CatalogSpec = Field(default_factory=lambda: CatalogSpec(kind="zero"))

    q1: float | None = Field(default=None, ge=0.0)
    q2: float | None = Field(default=None, ge=0.0)
    q3: CoefficientInput | None = None
    q4: CoefficientInput | None = None

    @model_validator(mode="after")
    def check_consistency(self) -> "ProblemFile":
        a, b = self.interval
        if not a < b:
            raise ValueError(f"interval must satisfy a < b, got [{a}, {b}]")
        if self.q2 is not None and self.q1 is None:
            raise ValueError("q2 given without q1")
        if self.q4 is not None and self.q3 is None:
            raise ValueError("q4 given without q3")
        return self

    def build(self) -> IvProblem:
        """Resolve catalog entries and return the validated problem."""
        constants = None
        if self.q1 is not None:
            constants = LipschitzConstants(q1=self.q1, q2=self.q2 or 0.0)

        growth = None
        if self.q3 is not None:
            growth = GrowthCoefficients(q3=_coefficient(self.q3), q4=_coefficient(self.q4 if self.q4 is not None else 0.0))

        return IvProblem(
            a=self.interval[0],
            b=self.interval[1],
            order=FractionalOrder(self.alpha, self.beta),
            psi=make_psi(self.psi.kind, **self.psi.params),
            z_a=self.z_a,
            f=make_rhs(self.f.kind, **self.f.params),
            w=make_kernel(self.w.kind, **self.w.params),
            constants=constants,
            growth=growth,
            name=self.name,
        )


def read_problem_file(path: Path) -> ProblemFile:
    """Parse a `.json` or `.toml` problem file."""
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".json":
        return ProblemFile.model_validate_json(path.read_text(encoding="utf-8"))
    if suffix == ".toml":
        try:
            data = tomllib.loads(path.read_text(encoding="utf-8"))
        except tomllib.TOMLDecodeError as e:
            raise InvalidInputError(f"malformed TOML in {path}: {e}") from e
        return ProblemFile.model_validate(data)
    raise InvalidInputError(f"unsupported problem file type '{path.suffix}' (expected .json or .toml)")
