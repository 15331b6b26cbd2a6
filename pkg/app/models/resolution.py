"""Schemas for free resolutions, Betti tables and verification reports."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.algebra.oracle import VerificationReport
from app.algebra.resolution import Resolution, betti
from app.algebra.semigroup import Action
from app.models.invariants import ActionBase


class ModuleRead(BaseModel):
    """Free module F_i given by its twists."""
    index: int = Field(..., ge=0)
    rank: int
    twists: List[int]


class BettiEntry(BaseModel):
    """One nonzero graded Betti number beta_{i,j}."""
    i: int
    j: int
    count: int


class ResolutionRead(ActionBase):
    """Schema for a minimal graded free resolution."""
    method: str = Field(..., description="Construction that produced the resolution")
    label: str = Field(..., description="Classification of the canonical action")
    degrees: List[int]
    ranks: List[int]
    modules: List[ModuleRead]
    betti: List[BettiEntry]
    matrices: Optional[List[List[List[str]]]] = Field(
        None, description="Differentials d_1, d_2, ... as rows of polynomial strings"
    )

    @classmethod
    def from_resolution(
        cls,
        action: Action,
        weight: int,
        method: str,
        label: str,
        res: Resolution,
        matrices: bool = False,
    ) -> "ResolutionRead":
        return cls(
            p=action.p,
            a=action.a,
            b=action.b,
            weight=weight,
            method=method,
            label=label,
            degrees=list(res.ring.degrees),
            ranks=res.ranks,
            modules=[
                ModuleRead(index=i, rank=module.rank, twists=sorted(module.twists))
                for i, module in enumerate(res.modules)
            ],
            betti=[BettiEntry(i=i, j=j, count=count) for (i, j), count in betti(res).entries],
            matrices=[d.to_strings() for d in res.differentials] if matrices else None,
        )


class VerificationRead(ActionBase):
    """Schema for the checks run against a computed resolution."""
    passed: bool
    checks: Dict[str, bool]
    details: Dict[str, str]

    @classmethod
    def from_report(cls, action: Action, weight: int, report: VerificationReport) -> "VerificationRead":
        return cls(
            p=action.p,
            a=action.a,
            b=action.b,
            weight=weight,
            passed=report.passed,
            checks=dict(report.checks),
            details=dict(report.details),
        )
