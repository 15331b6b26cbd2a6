"""Core infrastructure components for cycinv."""

from app.core.config import settings
from app.core.errors import (
    ClassificationError,
    CycinvError,
    DomainError,
    InhomogeneousIdealError,
    MethodNotApplicableError,
    ParameterError,
    RingMismatchError,
    TheoremViolationError,
)
from app.core.logging import get_logger

__all__ = [
    "settings",
    "get_logger",
    "CycinvError",
    "ParameterError",
    "DomainError",
    "RingMismatchError",
    "InhomogeneousIdealError",
    "ClassificationError",
    "MethodNotApplicableError",
    "TheoremViolationError",
]
