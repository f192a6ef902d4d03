"""route '/v1/certify' - contraction certificate of an inline problem"""

import anyio
from fastapi import APIRouter, HTTPException

from app.utils.logger_config import logger
from fractional.analysis.certificate import contraction_certificate
from fractional.errors import FractionalError
from schemas.api.solver_types import CertifyRequest, CertifyResponse

router = APIRouter(prefix="/v1", tags=["Analysis"])


def _certify_blocking(request: CertifyRequest) -> CertifyResponse:
    problem = request.problem.build()
    certificate = contraction_certificate(problem, n=request.n)
    return CertifyResponse(
        problem=problem.name,
        p=certificate.p,
        q=certificate.q,
        q_variant_alt=certificate.q_variant_alt,
        unique=certificate.unique,
    )


@router.post("/certify", response_model=CertifyResponse, summary="Uniqueness certificate (p, q)")
async def certify_problem(request: CertifyRequest):
    logger.info("api: [FASTAPI]: certify request for '%s'", request.problem.name)

    try:
        return await anyio.to_thread.run_sync(_certify_blocking, request)
    except FractionalError as e:
        logger.warning("api: [FASTAPI]: certificate unavailable for '%s': %s", request.problem.name, e)
        raise HTTPException(status_code=422, detail=str(e)) from e
    except Exception as e:
        logger.error("api: [FASTAPI]: certify failed for '%s': %s", request.problem.name, e, exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error while certifying: {e}") from e
