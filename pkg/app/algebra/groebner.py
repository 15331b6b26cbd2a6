"""
Buchberger engine, ideal comparison and the toric presentation kernel.

The kernel of y_i -> x1^c_i x2^d_i is computed by elimination: a Groebner
basis of the graph ideal {y_i - x1^c_i x2^d_i} under an order that puts
the x-block first, intersected with the y-subring. Outputs are pure
difference binomials that are homogeneous for deg y_i = c_i + d_i.
"""

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from app.algebra.polyalg import (
    GradedRing,
    Monomial,
    MonomialOrder,
    Polynomial,
    coprime,
    divides,
    mono_lcm,
    normal_form,
    presentation_ring,
    s_polynomial,
)
from app.algebra.semigroup import InvariantSet, degrees
from app.core.errors import InhomogeneousIdealError, ParameterError, RingMismatchError
from app.core.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Ideal:
    """
    Ideal given by generators in a graded ring.

    Attributes:
        ring: Ambient ring
        generators: Nonzero generators (empty for the zero ideal)
    """

    ring: GradedRing
    generators: Tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"generator {g} is not in {self.ring.names}")
        object.__setattr__(self, "generators", tuple(g for g in self.generators if g))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self) -> None:
        for g in self.generators:
            if not g.is_homogeneous():
                raise InhomogeneousIdealError(f"generator {g} is not homogeneous")


def degree_matrix(inv: InvariantSet) -> List[List[int]]:
    """2 x (n+1) matrix whose columns are the generator exponents."""
    return [[pt.c for pt in inv.points], [pt.d for pt in inv.points]]


def buchberger(gens: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    """
    Compute a Groebner basis.

    Pairs are processed by the normal strategy (smallest lcm degree first)
    and skipped when the leading monomials are coprime or when the chain
    criterion applies.

    Args:
        gens: Nonempty generator list from one ring
        order: Monomial order (ring default if omitted)

    Returns:
        Generators followed by the nonzero reduced S-polynomials, made monic
    """
    if not gens:
        raise ParameterError("buchberger needs at least one generator")
    nonzero = [g for g in gens if g]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    order = order or ring.default_order()
    basis = [g.monic(order) for g in nonzero]
    leads: List[Monomial] = [g.leading_monomial(order) for g in basis]

    pending: Set[Tuple[int, int]] = set()
    queue: List[tuple] = []

    def push(i: int, j: int) -> None:
        lcm = mono_lcm(leads[i], leads[j])
        pending.add((i, j))
        heapq.heappush(queue, (ring.degree(lcm), order.key(lcm), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    reductions = 0
    while queue:
        _, _, i, j = heapq.heappop(queue)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        if coprime(leads[i], leads[j]) or _chain_criterion(i, j, leads, pending):
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        reductions += 1
        if remainder:
            remainder = remainder.monic(order)
            basis.append(remainder)
            leads.append(remainder.leading_monomial(order))
            new = len(basis) - 1
            for k in range(new):
                push(k, new)

    logger.debug(f"buchberger: {len(gens)} generators -> {len(basis)} elements, {reductions} reductions")
    return basis


def _chain_criterion(i: int, j: int, leads: List[Monomial], pending: Set[Tuple[int, int]]) -> bool:
    lcm = mono_lcm(leads[i], leads[j])
    for k, lead in enumerate(leads):
        if k in (i, j) or not divides(lead, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def reduce_basis(G: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    """
    Turn a Groebner basis into the reduced Groebner basis.

    Elements whose leading monomial is divisible by another element's are
    dropped, the rest are made monic and tail-reduced, and the result is
    sorted by leading monomial, largest first.
    """
    basis = [g for g in G if g]
    if not basis:
        return []
    order = order or basis[0].ring.default_order()
    basis = [g.monic(order) for g in basis]
    leads = [g.leading_monomial(order) for g in basis]

    minimal: List[Polynomial] = []
    for idx, (g, lead) in enumerate(zip(basis, leads)):
        redundant = any(
            divides(other, lead) and (other != lead or jdx < idx)
            for jdx, other in enumerate(leads)
            if jdx != idx
        )
        if not redundant:
            minimal.append(g)

    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return reduced


@lru_cache(maxsize=512)
def reduced_groebner_basis(ideal: Ideal, order: Optional[MonomialOrder] = None) -> Tuple[Polynomial, ...]:
    """Cached reduced Groebner basis of an ideal."""
    if not ideal.generators:
        return ()
    order = order or ideal.ring.default_order()
    return tuple(reduce_basis(buchberger(list(ideal.generators), order), order))


def ideal_equal(I: Ideal, J: Ideal, order: Optional[MonomialOrder] = None) -> bool:
    """
    Decide equality of two ideals by comparing reduced Groebner bases.

    Raises:
        RingMismatchError: If the ideals live in different rings
    """
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring.names} vs {J.ring.names}")
    order = order or I.ring.default_order()
    return reduced_groebner_basis(I, order) == reduced_groebner_basis(J, order)


def ideal_contains(ideal: Ideal, f: Polynomial, order: Optional[MonomialOrder] = None) -> bool:
    """Membership test via the reduced Groebner basis."""
    order = order or ideal.ring.default_order()
    return normal_form(f, reduced_groebner_basis(ideal, order), order).is_zero()


def minimal_generators(polys: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    """
    Minimal homogeneous generating subset of a homogeneous ideal.

    Polynomials are visited by ascending degree (then by leading monomial)
    and kept when they do not lie in the ideal of those already kept.

    Raises:
        InhomogeneousIdealError: If an input is not homogeneous
    """
    candidates = [f for f in polys if f]
    if not candidates:
        return []
    ring = candidates[0].ring
    order = order or ring.default_order()
    for f in candidates:
        if not f.is_homogeneous():
            raise InhomogeneousIdealError(f"{f} is not homogeneous")
    candidates.sort(key=lambda f: (f.homogeneous_degree(), order.key(f.leading_monomial(order))))

    kept: List[Polynomial] = []
    basis: List[Polynomial] = []
    for f in candidates:
        if basis and normal_form(f, basis, order).is_zero():
            continue
        kept.append(f)
        basis = reduce_basis(buchberger(basis + [f], order), order)
    return kept


def elimination_ring(inv: InvariantSet) -> GradedRing:
    """Ring Q[x_1, x_2, y_0..y_n] graded by 1, 1 and the generator degrees."""
    degs = degrees(inv)
    return GradedRing(
        names=("x_1", "x_2") + tuple(f"y_{i}" for i in range(len(degs))),
        degrees=(1, 1) + tuple(degs),
    )


def toric_kernel(inv: InvariantSet) -> Ideal:
    """
    Kernel of the presentation map y_i -> x1^c_i x2^d_i.

    Args:
        inv: Invariant set with n+1 points

    Returns:
        Ideal of the presentation ring generated by a minimal set of pure
        difference binomials
    """
    degs = degrees(inv)
    ring = presentation_ring(degs)
    big = elimination_ring(inv)
    order = MonomialOrder.block(2, degs)
    n = len(degs)

    graph = []
    for i, pt in enumerate(inv.points):
        y_mono = (0, 0) + tuple(1 if k == i else 0 for k in range(n))
        graph.append(Polynomial.binomial(big, y_mono, (pt.c, pt.d) + (0,) * n))

    basis = reduce_basis(buchberger(graph, order), order)
    eliminated = [
        Polynomial(ring, {mono[2:]: coeff for mono, coeff in g.items()})
        for g in basis
        if all(mono[0] == 0 and mono[1] == 0 for mono in g.monomials())
    ]
    generators = minimal_generators(eliminated, ring.default_order())
    logger.info(
        f"kernel of inv({inv.p},{inv.b}): {len(basis)} elimination elements, "
        f"{len(generators)} minimal generators"
    )
    return Ideal(ring=ring, generators=tuple(generators))


def _monomials_of_degree(weights: Sequence[int], degree: int) -> Iterator[Monomial]:
    n = len(weights)

    def walk(index: int, left: int, prefix: List[int]) -> Iterator[Monomial]:
        if index == n - 1:
            if left % weights[index] == 0:
                yield tuple(prefix + [left // weights[index]])
            return
        for exp in range(left // weights[index] + 1):
            yield from walk(index + 1, left - exp * weights[index], prefix + [exp])

    if n == 0:
        if degree == 0:
            yield ()
        return
    yield from walk(0, degree, [])


def standard_monomials(ideal: Ideal, order: Optional[MonomialOrder], degree: int) -> List[Monomial]:
    """
    Monomials of the given internal degree outside the leading-term ideal.

    Raises:
        ParameterError: If degree is negative
    """
    if degree < 0:
        raise ParameterError(f"degree must be non-negative, got {degree}")
    ideal.require_homogeneous()
    order = order or ideal.ring.default_order()
    leads = [g.leading_monomial(order) for g in reduced_groebner_basis(ideal, order)]
    return [
        mono
        for mono in _monomials_of_degree(ideal.ring.degrees, degree)
        if not any(divides(lead, mono) for lead in leads)
    ]


def standard_monomial_count(ideal: Ideal, order: Optional[MonomialOrder], degree: int) -> int:
    """Hilbert function of R/I at `degree`, counted from standard monomials."""
    return len(standard_monomials(ideal, order, degree))

