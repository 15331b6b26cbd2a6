"""Classification and sweep API endpoints."""

from fastapi import APIRouter, Query

from app.core.config import settings
from app.core.logging import get_logger
from app.models import ClassificationRead, SweepRead
from app.services import compute_classification
from app.sweep import sweep

logger = get_logger(__name__)

router = APIRouter()


@router.get("/classify", response_model=ClassificationRead)
def get_classification(
    p: int = Query(..., description="Prime group order"),
    b: int = Query(..., description="Weight of x2"),
    a: int = Query(1, description="Weight of x1"),
):
    """Get the classification label and its evidence."""
    return compute_classification(p, a, b)


@router.get("/sweep", response_model=SweepRead)
def get_sweep(
    p_max: int = Query(..., description="Largest prime to sweep"),
):
    """
    Sweep every canonical action with p <= p_max.

    Bounded by CYCINV_PMAX_LIMIT; always computed in a single process.
    """
    logger.info(f"API sweep up to {p_max} (limit {settings.pmax_limit})")
    return sweep(p_max, jobs=1)
