"""
Picard iteration to a fixed point in the weighted norm, and the derivative residual check.
"""

import math

import numpy as np
from scipy.special import gamma as gamma_fn

from app.core.settings import settings
from app.utils.logger_config import logger
from fractional.analysis.certificate import contraction_certificate
from fractional.errors import InvalidInputError
from fractional.operators.hilfer import check_indices, psi_hilfer_derivative
from fractional.problem.grid import make_grid, weighted_norm
from fractional.problem.problem import IvProblem
from fractional.solver.picard import inner_integrals, picard_step
from fractional.solver.report import SolveReport, SolveStatus


def solve(
    problem: IvProblem,
    n: int | None = None,
    tol: float | None = None,
    max_iter: int | None = None,
    with_residual: bool = False,
) -> SolveReport:
    """
    Iterate the Volterra map from r = z_a/Gamma(gamma) until a sweep moves the weighted norm by at most tol.

    Args:
        problem: Problem to solve.
        n: Number of psi-space panels (default from settings).
        tol: Stopping tolerance on the weighted-norm change, > 0.
        max_iter: Hard cap on sweeps, >= 1.
        with_residual: Also run the derivative residual check when converged.

    Returns:
        A report; exhausting max_iter gives status MAX_ITER, never an exception.

    Raises:
        InvalidInputError: tol or max_iter out of range.
        StepError: f or w failed during a sweep.
    """
    n = settings.DEFAULT_GRID_SIZE if n is None else n
    tol = settings.DEFAULT_TOLERANCE if tol is None else tol
    max_iter = settings.DEFAULT_MAX_ITER if max_iter is None else max_iter

    if not (math.isfinite(tol) and tol > 0.0):
        raise InvalidInputError(f"tolerance must be positive, got {tol}")
    if isinstance(max_iter, bool) or int(max_iter) != max_iter or max_iter < 1:
        raise InvalidInputError(f"max_iter must be an integer >= 1, got {max_iter}")

    grid = make_grid(problem, n)
    certificate = contraction_certificate(problem, grid=grid) if problem.constants is not None else None

    current = grid.with_values(np.full(grid.size + 1, problem.z_a / gamma_fn(problem.gamma)))
    history: list[float] = []
    status = SolveStatus.MAX_ITER

    logger.info("solver: '%s' alpha=%s beta=%s N=%d tol=%.1e", problem.name, problem.order.alpha, problem.order.beta, n, tol)
    for sweep in range(1, int(max_iter) + 1):
        updated = picard_step(current, problem)
        delta = float(np.max(np.abs(updated.regular_values - current.regular_values)))
        history.append(delta)
        current = updated
        logger.debug("solver: sweep %d delta=%.3e", sweep, delta)
        if delta <= tol:
            status = SolveStatus.CONVERGED
            break

    report = SolveReport(
        solution=current,
        iterations=len(history),
        final_delta=history[-1],
        status=status,
        tolerance=tol,
        delta_history=tuple(history),
        certificate=certificate,
    )

    if report.converged:
        logger.info("solver: converged after %d sweeps, delta=%.3e, |r|=%.6g", report.iterations, report.final_delta, weighted_norm(current))
        if with_residual:
            report.residual = residual_check(report, problem)
    else:
        logger.warning("solver: no convergence after %d sweeps, last delta=%.3e > tol=%.1e", report.iterations, report.final_delta, tol)
    return report


def residual_check(report: SolveReport, problem: IvProblem, corner_fraction: float | None = None) -> float:
    """
    max |^H D^{alpha,beta;psi} z - f(x, z, W)| over interior nodes past the corner fraction of the psi-span.

    The defect shrinks linearly with the psi-step.
    """
    if not report.converged:
        raise InvalidInputError("residual check needs a converged report")

    solution = report.solution
    derivative = psi_hilfer_derivative(solution, problem.order, problem.psi)

    if problem.f.uses_inner and not problem.w.is_zero:
        inner = inner_integrals(problem.w, solution)
    else:
        inner = np.zeros_like(solution.nodes)

    indices = check_indices(solution, corner_fraction)
    forcing = problem.f(solution.nodes[indices], solution.values[indices], inner[indices])
    defect = float(np.max(np.abs(derivative[indices - 1] - forcing)))
    logger.info("solver: residual defect %.3e on %d nodes", defect, len(indices))
    return defect
