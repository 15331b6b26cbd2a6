"""
Closed-form classification of cyclic actions and the theorem cross-checks.

Every classified action carries an evidence record: the product
(p-b)(p-b_inv) = pk + 1, the generator and slope counts and the division
data of p by b and by b_inv. The label follows a fixed priority order and
is validated against the computed invariant set; any contradiction is a
TheoremViolationError.
"""

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from app.algebra.modarith import mod_inverse
from app.algebra.semigroup import (
    Action,
    ExponentPair,
    InvariantSet,
    invariant_generators,
    normalize,
    slopes,
    validate_weight,
)
from app.core.errors import TheoremViolationError
from app.core.logging import get_logger

logger = get_logger(__name__)


class ClassKind(str, Enum):
    """Classification outcomes, listed in decision priority."""

    VERONESE = "Veronese"
    THREE_GENERATORS = "ThreeGenerators"
    CODIM2 = "Codim2"
    FIVE_GEN_2P1_LOWER = "FiveGen2p1Lower"
    FIVE_GEN_2P1_UPPER = "FiveGen2p1Upper"
    TWO_SLOPE = "TwoSlope"
    GENERAL = "General"


@dataclass(frozen=True)
class Evidence:
    """Numeric data backing a classification (canonical weight b <= b_inv)."""

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
    two_slope_condition: bool

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ClassLabel:
    """
    Primary label plus evidence.

    Attributes:
        kind: Label chosen by priority order
        evidence: Numeric evidence
        violations: Failed theorem checks (empty unless classified leniently)
    """

    kind: ClassKind
    evidence: Evidence
    violations: Tuple[str, ...] = field(default_factory=tuple)


def product_invariant(p: int, b: int) -> Tuple[int, int]:
    """
    Return ((p-b)(p-b_inv), k) with product = pk + 1.

    The product is always 1 modulo p since b * b_inv = 1 mod p.
    """
    validate_weight(p, b)
    b_inv = mod_inverse(b, p)
    product = (p - b) * (p - b_inv)
    return product, (product - 1) // p


def division_data(p: int, b: int) -> Tuple[int, int, int, int]:
    """(q, r, s, t) with p = bq + r and p = b_inv s + t."""
    validate_weight(p, b)
    q, r = divmod(p, b)
    s, t = divmod(p, mod_inverse(b, p))
    return q, r, s, t


def is_lower_2p1(p: int, b: int) -> bool:
    """True when 3 divides p-1 and b = (p-1)/3."""
    validate_weight(p, b)
    return (p - 1) % 3 == 0 and b == (p - 1) // 3


def five_generator_set(p: int, b: int) -> List[ExponentPair]:
    """
    Explicit invariant set for (p-b)(p-b_inv) = 2p+1.

    Lower branch (2b < p-1): the middle generator is (p-2b, 2).
    Upper branch: it is ((p-b+1)/2, (p-b_inv+1)/2).
    """
    b_inv = mod_inverse(b, p)
    if 2 * b < p - 1:
        middle = ExponentPair(p - 2 * b, 2)
    else:
        middle = ExponentPair((p - b + 1) // 2, (p - b_inv + 1) // 2)
    return [
        ExponentPair(p, 0),
        ExponentPair(p - b, 1),
        middle,
        ExponentPair(1, p - b_inv),
        ExponentPair(0, p),
    ]


def gather_evidence(p: int, b: int, inv: Optional[InvariantSet] = None) -> Evidence:
    """Compute the evidence record for a canonical weight."""
    inv = inv or invariant_generators(p, b)
    product, k = product_invariant(p, b)
    q, r, s, t = division_data(p, b)
    return Evidence(
        p=p,
        b=b,
        b_inv=mod_inverse(b, p),
        product=product,
        k=k,
        n_invariants=len(inv),
        n_slopes=len(slopes(inv)),
        q=q,
        r=r,
        s=s,
        t=t,
        two_slope_condition=(r == s and q == t),
    )


def label_for(evidence: Evidence) -> ClassKind:
    """Apply the priority order to an evidence record."""
    p, b = evidence.p, evidence.b
    if b == 1:
        return ClassKind.VERONESE
    if b == p - 1:
        return ClassKind.THREE_GENERATORS
    if evidence.product == p + 1:
        return ClassKind.CODIM2
    if evidence.product == 2 * p + 1:
        return ClassKind.FIVE_GEN_2P1_LOWER if 2 * b < p - 1 else ClassKind.FIVE_GEN_2P1_UPPER
    if evidence.two_slope_condition:
        return ClassKind.TWO_SLOPE
    return ClassKind.GENERAL


def theorem_checks(evidence: Evidence, inv: InvariantSet) -> List[str]:
    """
    Evaluate every proved statement on one canonical action.

    Returns:
        Names of the failing checks, empty when all hold
    """
    p, b = evidence.p, evidence.b
    n = evidence.n_invariants
    failures: List[str] = []

    if (n == 4) != (evidence.product == p + 1):
        failures.append("four generators iff product = p+1")

    if evidence.product == 2 * p + 1:
        if n != 5:
            failures.append("product = 2p+1 implies five generators")
        elif list(inv.points) != five_generator_set(p, b):
            failures.append("product = 2p+1 explicit generator set")
        if 2 * b < p - 1 and not is_lower_2p1(p, b):
            failures.append("product = 2p+1 with 2b < p-1 implies b = (p-1)/3")

    if (evidence.n_slopes == 2) != evidence.two_slope_condition:
        failures.append("two slopes iff r = s and q = t")

    if p - 1 < 2 * b and b < p - 1 and evidence.two_slope_condition:
        failures.append("(p-1)/2 < b < p-1 excludes r = s and q = t")

    if 1 < b and 2 * b < p - 1 and n <= 4:
        failures.append("1 < b < (p-1)/2 implies more than four generators")

    if evidence.k > 1 and n <= 4:
        failures.append("product = pk+1 with k > 1 implies more than four generators")

    if b > 1 and evidence.r < evidence.s:
        failures.append("b > 1 implies r >= s")

    return failures


def classify(p: int, b: int, a: int = 1, strict: bool = True) -> ClassLabel:
    """
    Classify the action (p, a, b).

    The action is normalised first; the label and evidence refer to the
    canonical weight.

    Args:
        p: Prime group order
        b: Weight of x2
        a: Weight of x1
        strict: Raise on a failed theorem check instead of recording it

    Returns:
        ClassLabel with evidence

    Raises:
        ParameterError: If (p, a, b) is not a valid action
        TheoremViolationError: If strict and a cross-check fails
    """
    canonical = normalize(Action(p=p, a=a, b=b))
    inv = invariant_generators(p, canonical.b)
    evidence = gather_evidence(p, canonical.b, inv)
    kind = label_for(evidence)
    failures = theorem_checks(evidence, inv)
    if failures:
        logger.error(f"theorem check failed for p={p}, b={canonical.b}: {failures}")
        if strict:
            raise TheoremViolationError("; ".join(failures), evidence.as_dict())
    logger.debug(f"classified p={p}, a={a}, b={b} as {kind.value}")
    return ClassLabel(kind=kind, evidence=evidence, violations=tuple(failures))
