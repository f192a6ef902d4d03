"""route '/v1/solve' - solve an inline problem by Picard iteration"""

import math

import anyio
from fastapi import APIRouter, HTTPException

from app.utils.logger_config import logger
from fractional.errors import FractionalError
from fractional.solver.solve import solve
from schemas.api.solver_types import SolveRequest, SolveResponse

router = APIRouter(prefix="/v1", tags=["Solver"])


def _solve_blocking(request: SolveRequest) -> SolveResponse:
    problem = request.problem.build()
    report = solve(problem, n=request.n, tol=request.tol, max_iter=request.max_iter, with_residual=request.with_residual)
    grid = report.solution
    return SolveResponse(
        problem=problem.name,
        converged=report.converged,
        iterations=report.iterations,
        final_delta=report.final_delta,
        certified=report.certified,
        q=None if report.certificate is None else report.certificate.q,
        residual=report.residual,
        nodes=grid.nodes.tolist(),
        r=grid.regular_values.tolist(),
        z=[float(v) if math.isfinite(v) else None for v in grid.values],
    )


@router.post("/solve", response_model=SolveResponse, summary="Solve a psi-Hilfer initial-value problem")
async def solve_problem(request: SolveRequest):
    """
    Solve the inlined problem.

    The numeric work runs in a worker thread so the event loop stays free.
    Non-convergence is a 200 response with converged=false.
    """
    logger.info("api: [FASTAPI]: solve request for '%s' with N=%d", request.problem.name, request.n)

    try:
        return await anyio.to_thread.run_sync(_solve_blocking, request)
    except FractionalError as e:
        logger.warning("api: [FASTAPI]: rejected problem '%s': %s", request.problem.name, e)
        raise HTTPException(status_code=422, detail=str(e)) from e
    except Exception as e:
        logger.error("api: [FASTAPI]: solve failed for '%s': %s", request.problem.name, e, exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error while solving: {e}") from e
