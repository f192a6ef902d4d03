"""Router configuration and all API endpoints."""

from fastapi import APIRouter

from app.api.v1 import certify, healthcheck, solve

api_router = APIRouter()

# Include routers
api_router.include_router(healthcheck.router)  # Root route - /
api_router.include_router(solve.router)  # /v1/solve
api_router.include_router(certify.router)  # /v1/certify
