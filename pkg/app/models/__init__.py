"""Response schemas shared by the CLI and the HTTP service."""

from app.models.classification import (
    CSV_COLUMNS,
    ClassificationRead,
    EvidenceRead,
    SweepRead,
    SweepRow,
)
from app.models.invariants import ActionBase, InvariantSetRead, KernelRead, SlopeLineRead
from app.models.resolution import BettiEntry, ModuleRead, ResolutionRead, VerificationRead

__all__ = [
    "CSV_COLUMNS",
    "ActionBase",
    "BettiEntry",
    "ClassificationRead",
    "EvidenceRead",
    "InvariantSetRead",
    "KernelRead",
    "ModuleRead",
    "ResolutionRead",
    "SlopeLineRead",
    "SweepRead",
    "SweepRow",
    "VerificationRead",
]
