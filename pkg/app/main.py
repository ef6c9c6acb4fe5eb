from logging import getLogger
from typing import Optional
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from starlette.middleware.cors import CORSMiddleware

from app.api.v1.models import ResponseStatus
from app.api.v1.routes import get_routes
from app.core.errors import ConstructionInvalid, MonopoleError
from app.core.settings import Settings

logger = getLogger(__name__)


def monopole_error_handler(request: Request, error: MonopoleError) -> JSONResponse:
    """Refused computations surface as 422 with the error kind and, when present, the failing report."""
    logger.warning(f"{request.url.path} refused: {type(error).__name__}: {error}")
    content = {
        "status": ResponseStatus.FAIL.value,
        "message": str(error),
        "error": type(error).__name__,
    }
    if isinstance(error, ConstructionInvalid) and error.report is not None:
        content["report"] = error.report.to_dict()
    return JSONResponse(status_code=422, content=content)


def get_app(settings: Optional[Settings] = None) -> FastAPI:
    if not settings:
        settings = Settings()

    web_app = FastAPI(
        title=settings.PROJECT_NAME,
        openapi_url=f"{settings.API_V1_STR}/openapi.json",
        version="0.1.0",
    )

    web_app.state.settings = settings

    logger.info(f"Starting API with structural tolerance {settings.MONOPOLE_TOL:.1e}")

    # Set all CORS enabled origins
    if settings.BACKEND_CORS_ORIGINS:
        web_app.add_middleware(
            CORSMiddleware,
            allow_origins=[str(origin) for origin in settings.BACKEND_CORS_ORIGINS],
            allow_credentials=True,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    web_app.add_exception_handler(MonopoleError, monopole_error_handler)

    routes = get_routes(settings)
    web_app.include_router(routes, prefix=settings.API_V1_STR)

    return web_app


app = get_app()


if __name__ == "__main__":
    # Debugging only. Run `poetry run uvicorn app.main:app` otherwise, or from the
    # repository root: `PYTHONPATH=. poetry run python ./app/main.py`
    import uvicorn
    import argparse

    parser = argparse.ArgumentParser(
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "-p",
        "--port",
        default=8000,
        type=int,
        help="The port to listen on",
    )
    args = parser.parse_args()

    uvicorn.run(app, host="0.0.0.0", port=args.port)
