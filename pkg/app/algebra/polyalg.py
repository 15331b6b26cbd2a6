"""
Exact multivariate polynomials over the rationals with graded monomial orders.

Monomials are exponent tuples, coefficients are fractions.Fraction and a
Polynomial is an immutable mapping from monomials to nonzero coefficients
attached to a GradedRing. Monomial orders are expressed as sort keys so
that comparisons, leading terms and canonical rendering all share the
same definition.

Example:
    >>> ring = presentation_ring([7, 5, 3, 7])
    >>> f = parse_polynomial("y_1^2 - y_0*y_2", ring)
    >>> str(f)
    'y_1^2 - y_0*y_2'
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Integer, Poly, Rational, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from app.core.errors import DomainError, ParameterError, RingMismatchError

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(e1 + e2 for e1, e2 in zip(m1, m2))


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    """Quotient m1 / m2; caller guarantees m2 divides m1."""
    return tuple(e1 - e2 for e1, e2 in zip(m1, m2))


def divides(m1: Monomial, m2: Monomial) -> bool:
    """True if m1 divides m2."""
    return all(e1 <= e2 for e1, e2 in zip(m1, m2))


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(e1, e2) for e1, e2 in zip(m1, m2))


def coprime(m1: Monomial, m2: Monomial) -> bool:
    return all(e1 == 0 or e2 == 0 for e1, e2 in zip(m1, m2))


@dataclass(frozen=True)
class GradedRing:
    """
    Polynomial ring Q[v_0..v_n] graded by positive internal degrees.

    Attributes:
        names: Variable names in order, highest variable first
        degrees: Internal degree of each variable
    """

    names: Tuple[str, ...]
    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.degrees):
            raise ParameterError("each variable needs exactly one degree")
        if any(d <= 0 for d in self.degrees):
            raise ParameterError(f"variable degrees must be positive, got {self.degrees}")
        if len(set(self.names)) != len(self.names):
            raise ParameterError(f"duplicate variable names in {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def degree(self, mono: Monomial) -> int:
        """Internal degree of a monomial."""
        return sum(d * e for d, e in zip(self.degrees, mono))

    def default_order(self) -> "MonomialOrder":
        """Weighted grevlex with the ring's degrees as weights."""
        return MonomialOrder.grevlex(self.degrees)

    def unit(self, index: int) -> Monomial:
        return tuple(1 if i == index else 0 for i in range(self.nvars))

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.one_monomial: Fraction(1)})

    def variable(self, index: int) -> "Polynomial":
        return Polynomial(self, {self.unit(index): Fraction(1)})

    def monomial(self, exponents: Sequence[int], coeff: Coefficient = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exponents): Fraction(coeff)})


def presentation_ring(degrees: Sequence[int], prefix: str = "y") -> GradedRing:
    """Ring with variables y_0..y_n carrying the given internal degrees."""
    return GradedRing(
        names=tuple(f"{prefix}_{i}" for i in range(len(degrees))),
        degrees=tuple(degrees),
    )


class OrderKind(str, Enum):
    """Supported monomial orders."""

    GREVLEX = "grevlex"
    LEX = "lex"
    BLOCK = "block"


@dataclass(frozen=True)
class MonomialOrder:
    """
    Monomial order described by a kind and per-variable weights.

    GREVLEX compares weighted degree first and then prefers the monomial
    with the smaller exponent in the last variable where they differ.
    BLOCK splits the variables after `split`: the first block is compared
    first with weights 1, the second with its own weights, each by GREVLEX.
    """

    kind: OrderKind
    weights: Tuple[int, ...]
    split: int = 0

    @classmethod
    def grevlex(cls, weights: Sequence[int]) -> "MonomialOrder":
        return cls(OrderKind.GREVLEX, tuple(weights))

    @classmethod
    def lex(cls, nvars: int) -> "MonomialOrder":
        return cls(OrderKind.LEX, (1,) * nvars)

    @classmethod
    def block(cls, first: int, second_weights: Sequence[int]) -> "MonomialOrder":
        """Elimination order for `first` variables ahead of a weighted block."""
        return cls(OrderKind.BLOCK, (1,) * first + tuple(second_weights), split=first)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def key(self, mono: Monomial) -> tuple:
        """Sort key: larger key means larger monomial."""
        return _order_key(self, mono)


def _grevlex_key(weights: Sequence[int], mono: Monomial) -> tuple:
    return (sum(w * e for w, e in zip(weights, mono)), tuple(-e for e in reversed(mono)))


@lru_cache(maxsize=1 << 18)
def _order_key(order: MonomialOrder, mono: Monomial) -> tuple:
    if order.kind is OrderKind.LEX:
        return mono
    if order.kind is OrderKind.GREVLEX:
        return _grevlex_key(order.weights, mono)
    k = order.split
    return (_grevlex_key(order.weights[:k], mono[:k]), _grevlex_key(order.weights[k:], mono[k:]))


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """
    Compare two monomials.

    Returns:
        1 if m1 > m2, -1 if m1 < m2, 0 if equal

    Raises:
        RingMismatchError: If the monomials do not fit the order's variables
    """
    if len(m1) != order.nvars or len(m2) != order.nvars:
        raise RingMismatchError(
            f"monomials of length {len(m1)} and {len(m2)} under an order on {order.nvars} variables"
        )
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


class Polynomial:
    """
    Immutable polynomial with exact rational coefficients.

    Zero coefficients are never stored. Arithmetic between polynomials of
    different rings raises RingMismatchError.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: GradedRing, terms: Mapping[Monomial, Coefficient]):
        self.ring = ring
        cleaned: Dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            if len(mono) != ring.nvars:
                raise RingMismatchError(f"monomial {mono} does not belong to {ring.names}")
            if coeff:
                cleaned[tuple(mono)] = Fraction(coeff)
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def binomial(cls, ring: GradedRing, m1: Monomial, m2: Monomial) -> "Polynomial":
        """Pure difference m1 - m2."""
        return cls(ring, {m1: 1, m2: -1}) if m1 != m2 else ring.zero()

    # Inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_pure_binomial(self) -> bool:
        """True for m1 - m2 with coefficients +1 and -1."""
        return len(self._terms) == 2 and sorted(self._terms.values()) == [-1, 1]

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[Monomial, Fraction]]:
        """Terms in decreasing order."""
        order = order or self.ring.default_order()
        return sorted(self._terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        order = order or self.ring.default_order()
        mono = max(self._terms, key=order.key)
        return mono, self._terms[mono]

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> Fraction:
        return self.leading_term(order)[1]

    def homogeneous_degree(self) -> Optional[int]:
        """Common internal degree of all terms, or None if inhomogeneous or zero."""
        found = {self.ring.degree(m) for m in self._terms}
        return found.pop() if len(found) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.homogeneous_degree() is not None

    def variables_used(self) -> List[int]:
        return sorted({i for m in self._terms for i, e in enumerate(m) if e})

    # Arithmetic

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring.names} vs {other.ring.names}")

    def _coerce(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.ring, {self.ring.one_monomial: other})
        return NotImplemented

    def __add__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = mono_mul(m1, m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise DomainError("negative powers are not polynomials")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def mul_term(self, mono: Monomial, coeff: Coefficient = 1) -> "Polynomial":
        """Multiply by the single term coeff * mono."""
        coeff = Fraction(coeff)
        return Polynomial(self.ring, {mono_mul(m, mono): c * coeff for m, c in self._terms.items()})

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        lc = self.leading_coefficient(order)
        return Polynomial(self.ring, {m: c / lc for m, c in self._terms.items()})

    def evaluate_monomial_map(self, images: Sequence[Monomial]) -> Dict[Monomial, Fraction]:
        """
        Substitute variable i by the monomial images[i] of another ring.

        Returns:
            The image as a term dictionary with zero coefficients dropped
        """
        result: Dict[Monomial, Fraction] = {}
        width = len(images[0]) if images else 0
        for mono, coeff in self._terms.items():
            image = [0] * width
            for exp, target in zip(mono, images):
                for j in range(width):
                    image[j] += exp * target[j]
            key = tuple(image)
            result[key] = result.get(key, 0) + coeff
        return {m: c for m, c in result.items() if c}

    # Comparison and rendering

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial(self.ring, {self.ring.one_monomial: other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, order: Optional[MonomialOrder] = None) -> str:
        """Canonical text: terms in decreasing order, `y_i^e` powers, `*` products."""
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for index, (mono, coeff) in enumerate(self.sorted_terms(order)):
            factors = [
                name if exp == 1 else f"{name}^{exp}"
                for name, exp in zip(self.ring.names, mono)
                if exp
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if index == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r})"


def parse_polynomial(text: str, ring: GradedRing) -> Polynomial:
    """
    Parse a polynomial written with the ring's variable names.

    Accepts `^` or `**` for powers and rational coefficients.

    Raises:
        ParameterError: If the text is not a polynomial in the ring's variables
    """
    symbols = [Symbol(name) for name in ring.names]
    local = {name: sym for name, sym in zip(ring.names, symbols)}
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            transformations=standard_transformations + (convert_xor,),
        )
        poly = Poly(expr, *symbols, domain="QQ")
    except Exception as exc:
        raise ParameterError(f"cannot parse polynomial {text!r}: {exc}") from exc
    terms = {
        tuple(int(e) for e in mono): Fraction(int(coeff.p), int(coeff.q))
        for mono, coeff in poly.terms()
    }
    return Polynomial(ring, terms)


def to_sympy(f: Polynomial):
    """Convert to a sympy expression over Symbols named like the ring variables."""
    symbols = [Symbol(name) for name in f.ring.names]
    expr = Integer(0)
    for mono, coeff in f.items():
        term = Rational(coeff.numerator, coeff.denominator)
        for sym, exp in zip(symbols, mono):
            term = term * sym ** exp
        expr += term
    return expr


def _check_same_ring(polys: Iterable[Polynomial], ring: GradedRing) -> None:
    for g in polys:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring.names} vs {ring.names}")


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> Polynomial:
    """
    Fully reduce f by the list G.

    The greatest remaining term is reduced by the first element of G whose
    leading monomial divides it; terms no leading monomial divides move to
    the remainder.

    Args:
        f: Polynomial to reduce
        G: Divisors, in priority order (zero entries ignored)
        order: Monomial order (ring default if omitted)

    Returns:
        Remainder with no term divisible by a leading monomial of G
    """
    order = order or f.ring.default_order()
    _check_same_ring(G, f.ring)
    divisors = []
    for g in G:
        if g:
            lm, lc = g.leading_term(order)
            divisors.append((lm, lc, list(g.items())))

    work: Dict[Monomial, Fraction] = dict(f.items())
    remainder: Dict[Monomial, Fraction] = {}
    key = order.key
    while work:
        mono = max(work, key=key)
        coeff = work[mono]
        for lm, lc, g_terms in divisors:
            if divides(lm, mono):
                shift = mono_div(mono, lm)
                factor = coeff / lc
                for g_mono, g_coeff in g_terms:
                    target = mono_mul(g_mono, shift)
                    value = work.get(target, 0) - factor * g_coeff
                    if value:
                        work[target] = value
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return Polynomial(f.ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: Optional[MonomialOrder] = None) -> Polynomial:
    """
    S-polynomial (L/lt(f)) f - (L/lt(g)) g with L = lcm of leading monomials.

    Raises:
        DomainError: If f or g is zero
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("s_polynomial needs nonzero inputs")
    f._check_ring(g)
    order = order or f.ring.default_order()
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    lcm = mono_lcm(lm_f, lm_g)
    return f.mul_term(mono_div(lcm, lm_f), 1 / lc_f) - g.mul_term(mono_div(lcm, lm_g), 1 / lc_g)
