"""
Schemas for classifications and sweep rows.

SweepRow carries exactly the CSV columns, in order, plus the list of
failed theorem checks.
"""

from typing import List, Sequence

from pydantic import BaseModel, Field

from app.algebra.classify import ClassLabel

CSV_COLUMNS = ["p", "b", "b_inv", "product", "k", "n_invariants", "n_slopes", "q", "r", "s", "t", "label"]


class EvidenceRead(BaseModel):
    """Numeric evidence for a label, in terms of the canonical weight."""
    p: int
    b: int
    b_inv: int
    product: int = Field(..., description="(p-b)(p-b_inv)")
    k: int = Field(..., description="product = pk + 1")
    n_invariants: int
    n_slopes: int
    q: int = Field(..., description="p = qb + r")
    r: int
    s: int = Field(..., description="p = s b_inv + t")
    t: int
    two_slope_condition: bool


class ClassificationRead(BaseModel):
    """Schema for the classification of a single action."""
    p: int
    a: int
    b: int
    label: str
    evidence: EvidenceRead
    violations: List[str] = Field(default_factory=list)

    @classmethod
    def from_label(cls, p: int, a: int, b: int, label: ClassLabel) -> "ClassificationRead":
        return cls(
            p=p,
            a=a,
            b=b,
            label=label.kind.value,
            evidence=EvidenceRead(**label.evidence.as_dict()),
            violations=list(label.violations),
        )


class SweepRow(BaseModel):
    """One (p, b) row of a sweep."""
    p: int
    b: int
    b_inv: int
    product: int
    k: int
    n_invariants: int
    n_slopes: int
    q: int
    r: int
    s: int
    t: int
    label: str
    violations: List[str] = Field(default_factory=list)

    @classmethod
    def from_label(cls, label: ClassLabel, extra_violations: Sequence[str] = ()) -> "SweepRow":
        evidence = label.evidence.as_dict()
        evidence.pop("two_slope_condition")
        return cls(
            **evidence,
            label=label.kind.value,
            violations=list(label.violations) + list(extra_violations),
        )

    def csv_values(self) -> List[str]:
        data = self.model_dump()
        return [str(data[column]) for column in CSV_COLUMNS]


class SweepRead(BaseModel):
    """Schema for a complete sweep."""
    p_max: int
    rows: List[SweepRow]
    violations: int = Field(..., description="Number of rows failing a check")
