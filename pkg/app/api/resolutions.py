"""Free resolution and verification API endpoints."""

from fastapi import APIRouter, Query

from app.constructions import AUTO
from app.core.logging import get_logger
from app.models import ResolutionRead, VerificationRead
from app.services import compute_resolution, compute_verification

logger = get_logger(__name__)

router = APIRouter()


@router.get("/resolution", response_model=ResolutionRead)
def get_resolution(
    p: int = Query(..., description="Prime group order"),
    b: int = Query(..., description="Weight of x2"),
    a: int = Query(1, description="Weight of x1"),
    method: str = Query(AUTO, description="general, hilbert-burch, eagon-northcott or auto"),
    matrices: bool = Query(False, description="Include the differential matrices"),
):
    """
    Get the minimal graded free resolution of the invariant ring.

    An inapplicable method is rejected with 400.
    """
    return compute_resolution(p, a, b, method=method, matrices=matrices)


@router.get("/verify", response_model=VerificationRead)
def get_verification(
    p: int = Query(..., description="Prime group order"),
    b: int = Query(..., description="Weight of x2"),
    a: int = Query(1, description="Weight of x1"),
):
    """Run the resolution checks on the general construction."""
    return compute_verification(p, a, b)
