"""
Minimal generating invariants of a cyclic prime-order action on k[x1, x2].

A generator g of order p acts by x1 -> w^a x1, x2 -> w^b x2. The invariant
ring is spanned by the monomials x1^c x2^d with ac + bd = 0 mod p, and its
minimal monomial generators form a staircase of exponent pairs between
(p, 0) and (0, p). This module normalises actions, computes those
staircases and derives their degrees and slopes.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

from app.algebra.modarith import is_prime, mod_inverse, residue
from app.core.errors import ParameterError
from app.core.logging import get_logger

logger = get_logger(__name__)

SlopeSet = FrozenSet[Fraction]


class ExponentPair(NamedTuple):
    """Lattice point (c, d) standing for the monomial x1^c x2^d."""

    c: int
    d: int

    def transposed(self) -> "ExponentPair":
        return ExponentPair(self.d, self.c)

    @property
    def degree(self) -> int:
        return self.c + self.d


def validate_weight(p: int, b: int) -> None:
    """
    Check that p is prime and 0 < b < p.

    Raises:
        ParameterError: If either condition fails
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"p must be prime, got {p!r}")
    if not isinstance(b, int) or not 0 < b < p:
        raise ParameterError(f"weight must satisfy 0 < b < {p}, got {b!r}")


@dataclass(frozen=True)
class Action:
    """Group action parameters: x1 -> w^a x1, x2 -> w^b x2 with w^p = 1."""

    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        validate_weight(self.p, self.b)
        if not isinstance(self.a, int) or not 0 < self.a < self.p:
            raise ParameterError(f"a must satisfy 0 < a < {self.p}, got {self.a!r}")


@dataclass(frozen=True)
class CanonicalAction:
    """
    Reduced form (1, b) of an action with b <= b_inv.

    Attributes:
        p: Group order
        b: Canonical weight
        b_inv: Inverse of b modulo p
        swapped: Whether x1 and x2 were transposed to reach b <= b_inv
    """

    p: int
    b: int
    b_inv: int
    swapped: bool = False

    def __post_init__(self) -> None:
        validate_weight(self.p, self.b)
        if (self.b * self.b_inv) % self.p != 1:
            raise ParameterError(f"{self.b_inv} is not the inverse of {self.b} modulo {self.p}")
        if self.b > self.b_inv:
            raise ParameterError(f"canonical weight {self.b} exceeds its inverse {self.b_inv}")

    @property
    def reduced_weight(self) -> int:
        """Weight of the action reduced to a = 1, before any transposition."""
        return self.b_inv if self.swapped else self.b


@dataclass(frozen=True)
class InvariantSet:
    """
    Minimal generating invariants, listed with c strictly decreasing.

    Attributes:
        points: Exponent pairs from (p, 0) to (0, p)
        p: Group order
        b: Weight of the action with a = 1
    """

    points: Tuple[ExponentPair, ...]
    p: int
    b: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index: int) -> ExponentPair:
        return self.points[index]

    def transposed(self) -> "InvariantSet":
        """Invariant set after exchanging x1 and x2 (weight becomes b_inv)."""
        points = tuple(sorted((pt.transposed() for pt in self.points), key=lambda pt: -pt.c))
        return InvariantSet(points=points, p=self.p, b=mod_inverse(self.b, self.p))


def normalize(action: Action) -> CanonicalAction:
    """
    Reduce an action to the form (1, b) with b <= b_inv.

    Scaling by a_inv does not change the invariant ring; if the reduced
    weight exceeds its inverse the variables are transposed.

    Args:
        action: Validated action

    Returns:
        CanonicalAction with the swapped flag recording the transposition
    """
    reduced = residue(mod_inverse(action.a, action.p) * action.b, action.p)
    reduced_inv = mod_inverse(reduced, action.p)
    if reduced <= reduced_inv:
        return CanonicalAction(p=action.p, b=reduced, b_inv=reduced_inv, swapped=False)
    return CanonicalAction(p=action.p, b=reduced_inv, b_inv=reduced, swapped=True)


def invariant_generators(p: int, b: int) -> InvariantSet:
    """
    Compute the minimal generators of {(c, d) : c + bd = 0 mod p}.

    For every 1 <= d <= p-1 the only candidate generator is
    ((-bd) mod p, d); the axis points (p, 0) and (0, p) are always
    generators. A candidate is kept unless it is the componentwise sum of
    two other candidates.

    Args:
        p: Prime group order
        b: Weight with 0 < b < p

    Returns:
        The staircase InvariantSet

    Raises:
        ParameterError: If p is not prime or b is out of range
    """
    validate_weight(p, b)
    candidate = [(-b * d) % p for d in range(p)]

    interior: List[ExponentPair] = []
    for d in range(1, p):
        c = candidate[d]
        decomposable = any(
            candidate[d1] + candidate[d - d1] <= c for d1 in range(1, d // 2 + 1)
        )
        if not decomposable:
            interior.append(ExponentPair(c, d))

    points = [ExponentPair(p, 0)] + interior + [ExponentPair(0, p)]
    points.sort(key=lambda pt: -pt.c)
    logger.debug(f"inv({p},{b}) has {len(points)} generators")
    return InvariantSet(points=tuple(points), p=p, b=b)


def action_invariants(action: Action) -> InvariantSet:
    """Invariant set of the action as given, without transposition."""
    return invariant_generators(action.p, normalize(action).reduced_weight)


def division_family(p: int, b: int) -> FrozenSet[ExponentPair]:
    """
    Generators guaranteed by division of p by b and by b_inv.

    With p = bq + r and p = b_inv s + t, returns
    {(p - kb, k) : 0 <= k <= q} together with {(m, p - m b_inv) : 0 <= m <= s}.
    """
    validate_weight(p, b)
    b_inv = mod_inverse(b, p)
    q = p // b
    s = p // b_inv
    first = {ExponentPair(p - k * b, k) for k in range(q + 1)}
    second = {ExponentPair(m, p - m * b_inv) for m in range(s + 1)}
    return frozenset(first | second)


def special_cases(p: int, b: int) -> Optional[InvariantSet]:
    """
    Closed-form invariant sets for b = 1 (Veronese) and b = p - 1.

    Returns:
        The InvariantSet, or None for any other weight
    """
    validate_weight(p, b)
    if b == 1:
        points = tuple(ExponentPair(p - k, k) for k in range(p + 1))
    elif b == p - 1:
        points = (ExponentPair(p, 0), ExponentPair(1, 1), ExponentPair(0, p))
    else:
        return None
    return InvariantSet(points=points, p=p, b=b)


def slopes(inv: InvariantSet) -> SlopeSet:
    """Set of slopes between consecutive generators."""
    if len(inv) < 2:
        raise ParameterError("slopes need at least two points")
    return frozenset(
        Fraction(nxt.d - cur.d, nxt.c - cur.c) for cur, nxt in zip(inv.points, inv.points[1:])
    )


def slope_lines(inv: InvariantSet) -> List[Tuple[Fraction, ExponentPair, ExponentPair]]:
    """
    Group consecutive generators into maximal collinear runs.

    Returns:
        (slope, first point, last point) for each run, in staircase order
    """
    lines: List[Tuple[Fraction, ExponentPair, ExponentPair]] = []
    for cur, nxt in zip(inv.points, inv.points[1:]):
        slope = Fraction(nxt.d - cur.d, nxt.c - cur.c)
        if lines and lines[-1][0] == slope:
            lines[-1] = (slope, lines[-1][1], nxt)
        else:
            lines.append((slope, cur, nxt))
    return lines


def degrees(inv: InvariantSet) -> List[int]:
    """Total degrees c + d, which grade the presentation variables y_0..y_n."""
    return [pt.degree for pt in inv.points]


def extra_generator_witness(p: int, b: int) -> Optional[ExponentPair]:
    """
    Invariant outside the monoid of the four division-algorithm generators.

    Applies when (p-1)/2 < b < p-1 and (p-b)(p-b_inv) = pk + 1 with k > 1;
    x1^(b+1) x2^(p-b_inv-1) is then invariant but not generated by
    x1^p, x1^(p-b) x2, x1 x2^(p-b_inv) and x2^p.

    Returns:
        The witness, or None when the hypotheses fail
    """
    validate_weight(p, b)
    b_inv = mod_inverse(b, p)
    product = (p - b) * (p - b_inv)
    k = (product - 1) // p
    if not (2 * b > p - 1 and b < p - 1 and (product - 1) % p == 0 and k > 1):
        return None
    return ExponentPair(b + 1, p - b_inv - 1)
