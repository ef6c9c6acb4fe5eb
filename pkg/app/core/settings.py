from functools import lru_cache
from typing import List, Optional
from pydantic import AnyHttpUrl, BaseSettings
from pydantic.fields import Field

__all__ = ["Settings", "get_settings", "resolve_tol"]


# pylint:disable=too-few-public-methods
class Settings(BaseSettings):
    API_V1_STR: str = "/api/v1"
    BACKEND_CORS_ORIGINS: List[AnyHttpUrl] = Field(
        default=["http://localhost", "http://localhost:8080", "https://localhost"]
    )
    PROJECT_NAME: str = "hyperbolic-monopole-api-python"

    MONOPOLE_TOL: float = 1e-10
    """Structural tolerance: pure-imaginary and symmetry predicates, postconditions"""

    IDENTITY_TOL: float = 1e-12
    """Algebraic identities evaluated on exact inputs"""

    SNAP_TOL: float = 1e-8
    """Half-integer snapping of weights"""

    MARGIN: float = 1e-6
    """Positive-definiteness margin for sampled non-singularity"""

    RAY_SAMPLES: int = 2001
    DISC_SAMPLES: int = 201
    BALL_SAMPLES: int = 41
    EVALUATION_CHUNK: int = 4096

    FINITE_DIFFERENCE_STEP: float = 1e-3
    PHASE_GRID: int = 360

    EXCLUSION_MAX_RANK: int = 2
    EXCLUSION_STARTS: int = 24

    class Config:
        case_sensitive = True


@lru_cache
def get_settings() -> Settings:
    return Settings()


def resolve_tol(tol: Optional[float] = None) -> float:
    """Use the explicit tolerance when given, else the configured structural one."""
    return get_settings().MONOPOLE_TOL if tol is None else tol
