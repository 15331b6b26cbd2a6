"""
cycinv - HTTP service entry point

This module initializes the FastAPI application, loads the resolution
constructions and maps library errors to HTTP status codes.
"""

from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from app.api import classification, invariants, resolutions
from app.constructions import load_resolution_methods
from app.core.config import settings
from app.core.errors import CycinvError, ParameterError, TheoremViolationError
from app.core.logging import get_logger

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    FastAPI lifespan context manager.

    Loads the resolution constructions at startup so a broken plug-in is
    reported before the first request.
    """
    logger.info("=" * 60)
    logger.info(f"{settings.app_name} {settings.app_version} starting...")
    logger.info("=" * 60)

    methods = load_resolution_methods()
    if "general" not in methods:
        logger.warning("`general` construction disabled; auto and verify will fail")
    logger.info(f"Loaded {len(methods)} construction(s): {', '.join(sorted(methods))}")
    app.state.methods = sorted(methods)

    logger.info(f"API available at http://{settings.host}:{settings.api_port}/api")

    yield

    logger.info(f"{settings.app_name} shutdown complete")


# Create FastAPI application
app = FastAPI(
    title="cycinv",
    description="Invariant rings of cyclic group actions: generators, kernels, resolutions",
    version=settings.app_version,
    lifespan=lifespan,
)

app.include_router(invariants.router, prefix="/api", tags=["invariants"])
app.include_router(resolutions.router, prefix="/api", tags=["resolutions"])
app.include_router(classification.router, prefix="/api", tags=["classification"])


@app.exception_handler(CycinvError)
async def cycinv_error_handler(request: Request, exc: CycinvError) -> JSONResponse:
    """Parameter errors are the caller's fault (400); everything else is 500."""
    if isinstance(exc, ParameterError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})
    content = {"detail": str(exc)}
    if isinstance(exc, TheoremViolationError):
        content["evidence"] = exc.evidence
        logger.error(f"theorem violation on {request.url.path}: {exc}")
    else:
        logger.error(f"computation failed on {request.url.path}: {exc}")
    return JSONResponse(status_code=500, content=content)


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "version": settings.app_version,
        "methods": getattr(app.state, "methods", []),
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "app.main:app",
        host=settings.host,
        port=settings.api_port,
        reload=settings.debug,
        log_level="info",
    )
