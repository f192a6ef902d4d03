"""route '/' - service banner to verify the API works"""

from fastapi import APIRouter, Request

from app.utils.logger_config import logger
from fractional.problem.catalog import KERNEL_KINDS, RHS_KINDS
from fractional.problem.psi import PSI_KINDS

router = APIRouter(tags=["Health Check"])


@router.get("/", summary="Health Check")
def read_root(request: Request):
    """Service banner with the registered function catalog."""
    client_host = request.client.host if request.client else "unknown"
    logger.info("api: health check from %s", client_host)

    return {
        "message": "psi-Hilfer solver API works",
        "catalog": {"psi": sorted(PSI_KINDS), "f": sorted(RHS_KINDS), "w": sorted(KERNEL_KINDS)},
    }
