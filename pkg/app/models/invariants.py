"""
Schemas for invariant sets and kernel ideals.

The same models back the CLI JSON output and the HTTP responses.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from app.algebra.groebner import Ideal, reduced_groebner_basis
from app.algebra.semigroup import (
    Action,
    InvariantSet,
    degrees,
    extra_generator_witness,
    slope_lines,
    slopes,
)


class ActionBase(BaseModel):
    """Base schema with the action parameters."""
    p: int = Field(..., description="Prime group order")
    a: int = Field(1, description="Weight of x1")
    b: int = Field(..., description="Weight of x2")
    weight: int = Field(..., description="Weight of x2 once x1 has weight 1")


class SlopeLineRead(BaseModel):
    """Maximal run of collinear generators."""
    slope: str
    start: Tuple[int, int]
    end: Tuple[int, int]


class InvariantSetRead(ActionBase):
    """Schema for an invariant set with its staircase data."""
    points: List[Tuple[int, int]] = Field(..., description="Exponent pairs (c, d), c decreasing")
    degrees: List[int]
    slopes: List[str] = Field(..., description="Distinct slopes as reduced fractions")
    slope_lines: List[SlopeLineRead]
    witness: Optional[Tuple[int, int]] = Field(
        None, description="Invariant outside the four division-algorithm generators"
    )

    @classmethod
    def from_invariants(cls, action: Action, inv: InvariantSet) -> "InvariantSetRead":
        return cls(
            p=action.p,
            a=action.a,
            b=action.b,
            weight=inv.b,
            points=[(pt.c, pt.d) for pt in inv.points],
            degrees=degrees(inv),
            slopes=[str(s) for s in sorted(slopes(inv))],
            slope_lines=[
                SlopeLineRead(slope=str(s), start=(first.c, first.d), end=(last.c, last.d))
                for s, first, last in slope_lines(inv)
            ],
            witness=extra_generator_witness(action.p, inv.b),
        )


class KernelRead(ActionBase):
    """Schema for the kernel ideal of the presentation map."""
    variables: List[str]
    degrees: List[int]
    generators: List[str] = Field(..., description="Minimal binomial generators")
    reduced_basis: Optional[List[str]] = Field(
        None, description="Reduced Groebner basis under weighted grevlex"
    )

    @classmethod
    def from_ideal(cls, action: Action, inv: InvariantSet, ideal: Ideal, reduced: bool = False) -> "KernelRead":
        order = ideal.ring.default_order()
        basis = None
        if reduced:
            basis = [g.to_string(order) for g in reduced_groebner_basis(ideal, order)]
        return cls(
            p=action.p,
            a=action.a,
            b=action.b,
            weight=inv.b,
            variables=list(ideal.ring.names),
            degrees=list(ideal.ring.degrees),
            generators=[g.to_string(order) for g in ideal.generators],
            reduced_basis=basis,
        )
