"""
Brute-force oracles used to validate the fast paths.

Nothing here reuses the staircase shortcuts of the semigroup module or the
substitution helpers of the polynomial module: the semigroup is enumerated
over the whole box [0, p]^2 and kernel membership is decided by direct
substitution.
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from app.algebra.groebner import Ideal, ideal_equal, reduced_groebner_basis
from app.algebra.polyalg import Polynomial
from app.algebra.resolution import PolyMatrix, Resolution, hilbert_series_coefficients
from app.algebra.semigroup import ExponentPair, InvariantSet, validate_weight
from app.core.config import settings
from app.core.errors import DomainError, ParameterError, RingMismatchError
from app.core.logging import get_logger

logger = get_logger(__name__)


def brute_semigroup(p: int, b: int) -> InvariantSet:
    """
    Indecomposable members of {(c, d) in [0, p]^2 : c + bd = 0 mod p}.

    A member x is decomposable when some other nonzero member u <= x has
    x - u in the semigroup as well.
    """
    validate_weight(p, b)
    members: Set[Tuple[int, int]] = {
        (c, d)
        for c in range(p + 1)
        for d in range(p + 1)
        if (c, d) != (0, 0) and (c + b * d) % p == 0
    }
    generators = []
    for c, d in members:
        decomposable = any(
            (u, v) != (c, d) and u <= c and v <= d and (c - u, d - v) in members
            for u, v in members
        )
        if not decomposable:
            generators.append(ExponentPair(c, d))
    generators.sort(key=lambda pt: -pt.c)
    return InvariantSet(points=tuple(generators), p=p, b=b)


def kernel_membership(f: Polynomial, inv: InvariantSet) -> bool:
    """
    Substitute y_i -> x1^c_i x2^d_i and test for the zero polynomial.

    Raises:
        RingMismatchError: If f does not have one variable per generator
    """
    if f.ring.nvars != len(inv):
        raise RingMismatchError(f"{f.ring.nvars} variables for {len(inv)} generators")
    image: Dict[Tuple[int, int], Fraction] = {}
    for mono, coeff in f.items():
        c = sum(e * pt.c for e, pt in zip(mono, inv.points))
        d = sum(e * pt.d for e, pt in zip(mono, inv.points))
        image[(c, d)] = image.get((c, d), 0) + coeff
    return all(value == 0 for value in image.values())


def hilbert_count_invariants(p: int, b: int, n: int) -> int:
    """Number of invariant monomials x1^c x2^d with c + d = n."""
    validate_weight(p, b)
    if n < 0:
        raise ParameterError(f"degree must be non-negative, got {n}")
    return sum(1 for d in range(n + 1) if ((n - d) + b * d) % p == 0)


@dataclass
class VerificationReport:
    """
    Outcome of verify_resolution, one entry per check.

    Attributes:
        checks: Check name -> passed
        details: Check name -> explanation for failures
    """

    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = ok
        if not ok and detail:
            self.details[name] = detail

    def failures(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]


def verify_resolution(
    res: Resolution, ideal: Ideal, inv: InvariantSet, degree_bound: Optional[int] = None
) -> VerificationReport:
    """
    Check that res is a minimal graded free resolution of R/I.

    Checks: consecutive differentials compose to zero, no unit entries,
    d_1 generates I, every entry is homogeneous of the right degree, the
    length is |inv| - 2, and the Hilbert series implied by the twists
    matches the invariant count up to degree_bound (default factor * p).
    """
    report = VerificationReport()
    bound = degree_bound if degree_bound is not None else settings.euler_degree_factor * inv.p

    nonzero = []
    for i in range(len(res.differentials) - 1):
        if not (res.differentials[i] @ res.differentials[i + 1]).is_zero():
            nonzero.append(i + 1)
    report.record("complex", not nonzero, f"d_{nonzero} * d_next is not zero" if nonzero else "")

    units = [
        (i + 1, pos) for i, d in enumerate(res.differentials) for pos in d.unit_entries()
    ]
    report.record("minimality", not units, f"unit entries at {units[:5]}")

    if res.differentials:
        d1: PolyMatrix = res.differentials[0]
        generated = Ideal(ring=ideal.ring, generators=tuple(d1.entries[0]))
    else:
        generated = Ideal(ring=ideal.ring, generators=())
    report.record("generates", ideal_equal(generated, ideal), "d_1 does not generate the ideal")

    bad = [(i + 1, pos) for i, d in enumerate(res.differentials) for pos in d.inhomogeneous_entries()]
    report.record("homogeneity", not bad, f"inhomogeneous entries at {bad[:5]}")

    expected_length = len(inv) - 2
    report.record(
        "length",
        res.length == expected_length,
        f"length {res.length}, expected {expected_length}",
    )

    series = hilbert_series_coefficients(res, bound)
    counts = [hilbert_count_invariants(inv.p, inv.b, n) for n in range(bound + 1)]
    mismatch = next((n for n in range(bound + 1) if series[n] != counts[n]), None)
    report.record(
        "hilbert",
        mismatch is None,
        f"degree {mismatch}: series {series[mismatch]} vs count {counts[mismatch]}"
        if mismatch is not None else "",
    )

    if not report.passed:
        logger.warning(f"resolution check failed for inv({inv.p},{inv.b}): {report.failures()}")
    return report


def standard_log_values(ideal: Ideal, inv: InvariantSet) -> List[int]:
    """
    x1-exponents of the standard monomials in the interior variables.

    Standard means not divisible by a leading monomial of the reduced
    Groebner basis under the ring's weighted grevlex order; only the
    variables y_1..y_(n-1) are used.

    Returns:
        Sorted log values, one per standard monomial

    Raises:
        DomainError: If the interior standard monomials are not finite
    """
    ring = ideal.ring
    order = ring.default_order()
    leads = [g.leading_monomial(order) for g in reduced_groebner_basis(ideal, order)]
    interior = range(1, ring.nvars - 1)
    limit = inv.p * inv.p

    def standard(mono: Tuple[int, ...]) -> bool:
        return not any(all(le <= e for le, e in zip(lead, mono)) for lead in leads)

    start = ring.one_monomial
    seen = {start}
    queue = deque([start])
    while queue:
        mono = queue.popleft()
        for i in interior:
            nxt = tuple(e + 1 if k == i else e for k, e in enumerate(mono))
            if nxt not in seen and standard(nxt):
                seen.add(nxt)
                queue.append(nxt)
        if len(seen) > limit:
            raise DomainError(f"more than {limit} interior standard monomials")

    return sorted(sum(e * pt.c for e, pt in zip(mono, inv.points)) for mono in seen)
