"""
Invariant set and kernel API endpoints.

Endpoints are plain functions so FastAPI runs the exact algebra in its
thread pool instead of on the event loop.
"""

from fastapi import APIRouter, Query

from app.core.logging import get_logger
from app.models import InvariantSetRead, KernelRead
from app.services import compute_invariants, compute_kernel

logger = get_logger(__name__)

router = APIRouter()


@router.get("/invariants", response_model=InvariantSetRead)
def get_invariants(
    p: int = Query(..., description="Prime group order"),
    b: int = Query(..., description="Weight of x2"),
    a: int = Query(1, description="Weight of x1"),
):
    """
    Get the minimal generating invariants of the action.

    Returns the exponent pairs, their degrees, slopes and slope lines.
    """
    return compute_invariants(p, a, b)


@router.get("/kernel", response_model=KernelRead)
def get_kernel(
    p: int = Query(..., description="Prime group order"),
    b: int = Query(..., description="Weight of x2"),
    a: int = Query(1, description="Weight of x1"),
    reduced: bool = Query(False, description="Include the reduced Groebner basis"),
):
    """Get the binomial generators of the presentation kernel."""
    return compute_kernel(p, a, b, reduced=reduced)
