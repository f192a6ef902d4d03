"""Initial-value problem definition."""

import math
from dataclasses import dataclass

import numpy as np

from app.core.settings import settings
from fractional.errors import IncompatibleProblemsError, InvalidInputError
from fractional.problem.catalog import Coefficient, InnerKernel, RightHandSide
from fractional.problem.order import FractionalOrder
from fractional.problem.psi import PsiFunction


@dataclass(frozen=True, slots=True)
class LipschitzConstants:
    """
    Constants of the uniqueness hypotheses.

    Attributes:
        q1: |f(x,z,W) - f(x,z',W')| <= q1 (|z - z'| + |W - W'|).
        q2: |w(x,t,z) - w(x,t,z')| <= q2 |z - z'|.
    """

    q1: float
    q2: float = 0.0

    def __post_init__(self):
        if self.q1 < 0.0 or self.q2 < 0.0:
            raise InvalidInputError(f"Lipschitz constants must be nonnegative, got q1={self.q1}, q2={self.q2}")


@dataclass(frozen=True, eq=False)
class GrowthCoefficients:
    """
    Pointwise Lipschitz coefficients used by the a priori and dependence bounds.

    Attributes:
        q3: Coefficient for f in (z, W).
        q4: Coefficient for w in z.
    """

    q3: Coefficient
    q4: Coefficient


@dataclass(frozen=True, eq=False)
class IvProblem:
    """
    Problem  ^H D^{alpha,beta;psi} z = f(x, z, int_a^x w(x,t,z(t)) dt),  I^{1-gamma;psi} z(a) = z_a.

    Attributes:
        a, b: Interval ends, a < b.
        order: Fractional order (alpha, beta).
        psi: Weight function psi.
        z_a: Weighted initial datum.
        f: Right-hand side.
        w: Inner Volterra kernel.
        constants: Optional (Q1, Q2) for the uniqueness certificate.
        growth: Optional (Q3, Q4) for the a priori and dependence bounds.
        name: Free label used in reports.
    """

    a: float
    b: float
    order: FractionalOrder
    psi: PsiFunction
    z_a: float
    f: RightHandSide
    w: InnerKernel
    constants: LipschitzConstants | None = None
    growth: GrowthCoefficients | None = None
    name: str = "problem"

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.a >= self.b:
            raise InvalidInputError(f"interval must be finite with a < b, got [{self.a}, {self.b}]")
        if not math.isfinite(self.z_a):
            raise InvalidInputError("z_a must be finite")
        self.psi.check_on(self.a, self.b)

        if self.growth is not None:
            probes = np.linspace(self.a, self.b, settings.PSI_PROBE_POINTS)
            for name, coefficient in (("q3", self.growth.q3), ("q4", self.growth.q4)):
                values = coefficient(probes)
                if not np.all(np.isfinite(values)) or np.any(values < 0.0):
                    raise InvalidInputError(f"{name} must be finite and nonnegative on [{self.a}, {self.b}]")

    @property
    def interval(self) -> tuple[float, float]:
        return (self.a, self.b)

    @property
    def alpha(self) -> float:
        return self.order.alpha

    @property
    def gamma(self) -> float:
        return self.order.gamma

    @property
    def span(self) -> float:
        """S = psi(b) - psi(a)."""
        return float(self.psi(self.b) - self.psi(self.a))

    def check_compatible(self, other: "IvProblem") -> None:
        """Raise unless both problems share (alpha, beta), psi and the interval."""
        if self.order != other.order:
            raise IncompatibleProblemsError(f"orders differ: {self.order} vs {other.order}")
        if not self.psi.same_as(other.psi):
            raise IncompatibleProblemsError(f"psi differs: {self.psi.label}{self.psi.params} vs {other.psi.label}{other.psi.params}")
        if self.interval != other.interval:
            raise IncompatibleProblemsError(f"intervals differ: {self.interval} vs {other.interval}")
