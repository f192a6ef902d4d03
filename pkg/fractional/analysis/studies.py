"""
Solve-then-compare workflows behind the analysis commands of the CLI.
"""

from dataclasses import dataclass

import numpy as np

from app.core.settings import settings
from app.utils.logger_config import logger
from fractional.analysis.bounds import BoundEnvelope, ContainmentTable, apriori_bound, containment, dependence_bound, measure_mismatch
from fractional.operators.hilfer import round_trip_check
from fractional.problem.grid import SolutionGrid
from fractional.problem.problem import IvProblem
from fractional.solver.picard import inner_integrals
from fractional.solver.report import SolveReport
from fractional.solver.solve import solve

# Floor for eps when the measured mismatch is exactly zero
MIN_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True, eq=False)
class AprioriStudy:
    report: SolveReport
    envelope: BoundEnvelope
    table: ContainmentTable


@dataclass(frozen=True, eq=False)
class DependenceStudy:
    """
    Attributes:
        report: Solve of the original problem (z).
        perturbed_report: Solve of the perturbed problem (v).
        measured_eps: Mismatch measured along v.
        eps: eps actually used for the envelope.
        envelope: Dependence envelope.
        table: |z - v| against the envelope.
    """

    report: SolveReport
    perturbed_report: SolveReport
    measured_eps: float
    eps: float
    envelope: BoundEnvelope
    table: ContainmentTable


def apriori_study(problem: IvProblem, n: int | None = None, tol: float | None = None, max_iter: int | None = None) -> AprioriStudy:
    report = solve(problem, n=n, tol=tol, max_iter=max_iter)
    envelope = apriori_bound(problem, report.solution)
    table = containment(envelope, report.solution.values, problem.gamma)
    return AprioriStudy(report=report, envelope=envelope, table=table)


def dependence_study(
    problem: IvProblem,
    perturbed: IvProblem,
    n: int | None = None,
    tol: float | None = None,
    max_iter: int | None = None,
    eps: float | None = None,
) -> DependenceStudy:
    """
    Solve both problems on the same grid, measure the mismatch along v, build the envelope and compare.

    A caller-supplied eps below the measured mismatch is kept but logged.
    """
    problem.check_compatible(perturbed)
    report = solve(problem, n=n, tol=tol, max_iter=max_iter)
    perturbed_report = solve(perturbed, n=n, tol=tol, max_iter=max_iter)

    measured = measure_mismatch(problem, perturbed, perturbed_report.solution)
    if eps is None:
        used = max(measured, MIN_EPS)
    else:
        used = eps
        if eps < measured:
            logger.warning("analysis: supplied eps=%.3e is below the measured mismatch %.3e", eps, measured)

    envelope = dependence_bound(problem, perturbed, used, report.solution)
    difference = report.solution.values - perturbed_report.solution.values
    if problem.gamma < 1.0:
        difference[0] = np.inf
    table = containment(envelope, difference, problem.gamma)
    return DependenceStudy(
        report=report,
        perturbed_report=perturbed_report,
        measured_eps=measured,
        eps=used,
        envelope=envelope,
        table=table,
    )


@dataclass(frozen=True, eq=False)
class RefinementLevel:
    n: int
    report: SolveReport
    residual: float | None
    round_trip: float


@dataclass(frozen=True, eq=False)
class RefinementStudy:
    levels: tuple[RefinementLevel, ...]

    @property
    def converged(self) -> bool:
        return all(level.report.converged for level in self.levels)

    @staticmethod
    def _ratio(coarse: float | None, fine: float | None) -> float | None:
        if coarse is None or fine is None or fine == 0.0:
            return None
        return coarse / fine

    @property
    def residual_ratio(self) -> float | None:
        return self._ratio(self.levels[0].residual, self.levels[-1].residual)

    @property
    def round_trip_ratio(self) -> float | None:
        return self._ratio(self.levels[0].round_trip, self.levels[-1].round_trip)


def forcing_along(problem: IvProblem, solution: SolutionGrid) -> np.ndarray:
    """f(x, z, W) along a solution; x_0 is extrapolated when z is unbounded there."""
    if problem.f.uses_inner and not problem.w.is_zero:
        inner = inner_integrals(problem.w, solution)
    else:
        inner = np.zeros_like(solution.nodes)
    start = 1 if problem.gamma < 1.0 else 0
    forcing = np.empty_like(solution.nodes)
    forcing[start:] = problem.f(solution.nodes[start:], solution.values[start:], inner[start:])
    if start:
        forcing[0] = 2.0 * forcing[1] - forcing[2]
    return forcing


def refinement_study(problem: IvProblem, n: int | None = None, tol: float | None = None, max_iter: int | None = None) -> RefinementStudy:
    """Residual defect and round-trip deviation of the forcing at N and 2N."""
    n = n or settings.DEFAULT_GRID_SIZE
    levels = []
    for size in (n, 2 * n):
        report = solve(problem, n=size, tol=tol, max_iter=max_iter, with_residual=True)
        round_trip = round_trip_check(forcing_along(problem, report.solution), problem.order, report.solution)
        levels.append(RefinementLevel(n=size, report=report, residual=report.residual, round_trip=round_trip))
        logger.info("analysis: N=%d residual=%s round-trip=%.3e", size, report.residual, round_trip)
    return RefinementStudy(levels=tuple(levels))
