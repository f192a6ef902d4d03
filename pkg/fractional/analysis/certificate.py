"""Uniqueness certificate: the constants p and q of the Banach fixed-point argument."""

from dataclasses import dataclass
from typing import Literal

from scipy.special import gamma as gamma_fn

from app.core.settings import settings
from app.utils.logger_config import logger
from fractional.errors import CertificateUnavailableError, InvalidInputError
from fractional.problem.grid import SolutionGrid, make_grid, weighted_norm
from fractional.problem.problem import IvProblem
from fractional.solver.picard import picard_step

Variant = Literal["primary", "alt"]


@dataclass(frozen=True, slots=True)
class Certificate:
    """
    Attributes:
        p: Weighted norm of the Volterra map applied to z = 0.
        q: Contraction constant for the requested variant.
        q_variant_alt: q with Gamma(alpha + gamma) in the Q1 Q2 term.
        variant: Which denominator produced q.
    """

    p: float
    q: float
    q_variant_alt: float
    variant: Variant = "primary"

    @property
    def unique(self) -> bool:
        return self.q < 1.0

    def error_bound(self, delta: float) -> float | None:
        """delta q / (1 - q), the distance to the fixed point after a sweep that moved by delta."""
        if not self.unique:
            return None
        return delta * self.q / (1.0 - self.q)


def contraction_constant(q1: float, q2: float, alpha: float, gamma: float, span: float, variant: Variant = "primary") -> float:
    """
    q = Q1 Gamma(gamma)/Gamma(alpha+gamma) S^alpha + Q1 Q2 Gamma(gamma)/Gamma(alpha+gamma+1) S^{alpha+1}.

    The "alt" variant keeps Gamma(alpha+gamma) in the second denominator.
    """
    if variant not in ("primary", "alt"):
        raise InvalidInputError(f"unknown certificate variant '{variant}'")
    g = gamma_fn(gamma)
    first = q1 * g / gamma_fn(alpha + gamma) * span**alpha
    second_denominator = gamma_fn(alpha + gamma + 1.0) if variant == "primary" else gamma_fn(alpha + gamma)
    second = q1 * q2 * g / second_denominator * span ** (alpha + 1.0)
    return float(first + second)


def contraction_certificate(
    problem: IvProblem,
    variant: Variant = "primary",
    grid: SolutionGrid | None = None,
    n: int | None = None,
) -> Certificate:
    """
    Certificate for a problem carrying Lipschitz constants (Q1, Q2).

    Args:
        problem: Problem with `constants` set.
        variant: Gamma denominator used for q.
        grid: Grid on which p is maximized; built with `n` nodes (default size) when omitted.
        n: Grid size when no grid is given.

    Raises:
        CertificateUnavailableError: The problem has no Lipschitz constants.
    """
    if problem.constants is None:
        raise CertificateUnavailableError(f"problem '{problem.name}' carries no Lipschitz constants q1/q2")

    if grid is None:
        grid = make_grid(problem, n or settings.DEFAULT_GRID_SIZE)
    zero = grid.with_values(grid.regular_values * 0.0)
    p = weighted_norm(picard_step(zero, problem))

    q1, q2 = problem.constants.q1, problem.constants.q2
    q = contraction_constant(q1, q2, problem.alpha, problem.gamma, problem.span, variant)
    q_alt = contraction_constant(q1, q2, problem.alpha, problem.gamma, problem.span, "alt")

    logger.info("analysis: certificate for '%s': p=%.6g q=%.6g (alt %.6g)", problem.name, p, q, q_alt)
    return Certificate(p=p, q=q, q_variant_alt=q_alt, variant=variant)
