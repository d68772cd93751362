"""FastAPI application exposing the bounds over HTTP."""

from datetime import datetime, timezone

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from app import __version__
from app.api.routes import router
from app.api.schemas import ErrorResponse, HealthResponse
from app.common.config import get_settings
from app.common.errors import ComplexityError
from app.common.logger import get_logger

logger = get_logger(__name__)


def create_app() -> FastAPI:
    """Create and configure FastAPI application.

    Returns:
        Configured FastAPI app.
    """
    app = FastAPI(
        title="Two-Bridge Complexity API",
        description="""
        Read-only access to complexity bounds for two-bridge link complements.

        ## Endpoints
        - **GET /api/v1/expand/{p}/{q}**: normal form and continued fraction
        - **GET /api/v1/bound/{p}/{q}**, **GET /api/v1/bound?cf=**: bound report
        - **GET /api/v1/spine?cf=**: spine ledger trace
        - **GET /api/v1/cover/{p}/{q}/{d}**: branched cover bound
        - **GET /api/v1/family/{n}**, **GET /api/v1/pretzel?a=**, **GET /api/v1/census?max_p=**
        - **GET /api/v1/runs**, **GET /api/v1/runs/{run_id}**, **GET /api/v1/trace/{run_id}**: saved runs
        """,
        version=__version__,
        docs_url="/docs",
        redoc_url="/redoc",
    )

    app.include_router(router, prefix="/api/v1", tags=["Bounds"])

    @app.exception_handler(ComplexityError)
    async def complexity_error_handler(request: Request, exc: ComplexityError) -> JSONResponse:
        logger.info(f"{request.url.path}: {exc}")
        body = ErrorResponse(error=type(exc).__name__, detail=str(exc))
        return JSONResponse(status_code=422, content=body.model_dump())

    # Health check
    @app.get("/health", response_model=HealthResponse, tags=["Health"])
    async def health_check() -> HealthResponse:
        """Health check endpoint."""
        return HealthResponse(
            status="healthy",
            version=__version__,
            timestamp=datetime.now(timezone.utc).isoformat(),
        )

    @app.get("/", tags=["Root"])
    async def root() -> dict[str, str]:
        """Root endpoint with API info."""
        return {
            "name": "Two-Bridge Complexity API",
            "version": __version__,
            "docs": "/docs",
            "health": "/health",
        }

    logger.debug(f"Created FastAPI app version {__version__}")
    return app


# Create default app instance
app = create_app()


def run_server() -> None:
    """Run the API server."""
    import uvicorn

    settings = get_settings()
    uvicorn.run("app.api.main:app", host=settings.api_host, port=settings.api_port)


if __name__ == "__main__":
    run_server()
