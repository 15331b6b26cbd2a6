"""Tests for graded rings, monomial orders and polynomial arithmetic."""

import random
from fractions import Fraction

import pytest
import sympy

from app.algebra.polyalg import (
    GradedRing,
    MonomialOrder,
    Polynomial,
    compare,
    normal_form,
    parse_polynomial,
    presentation_ring,
    s_polynomial,
    to_sympy,
)
from app.core.errors import DomainError, ParameterError, RingMismatchError


def poly(text, ring):
    return parse_polynomial(text, ring)


def random_monomial(rng, n, max_exp=4):
    return tuple(rng.randint(0, max_exp) for _ in range(n))


def random_polynomial(rng, ring, n_terms=4):
    f = ring.zero()
    for _ in range(n_terms):
        f = f + ring.monomial(random_monomial(rng, ring.nvars, 3), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return f


class TestOrders:
    def test_weighted_grevlex_prefers_smaller_last_exponent(self, ring_7_3):
        order = ring_7_3.default_order()
        assert compare((0, 2, 0, 0), (1, 0, 1, 0), order) == 1
        assert compare((1, 0, 1, 0), (0, 2, 0, 0), order) == -1

    def test_weighted_degree_dominates(self, ring_7_3):
        order = ring_7_3.default_order()
        # y_2^4 has degree 12, y_0 y_3 has degree 14
        assert compare((1, 0, 0, 1), (0, 0, 4, 0), order) == 1

    def test_equal_monomials(self, ring_7_3):
        assert compare((1, 2, 3, 4), (1, 2, 3, 4), ring_7_3.default_order()) == 0

    def test_lex(self):
        assert compare((1, 0), (0, 5), MonomialOrder.lex(2)) == 1

    def test_block_order_eliminates_first_block(self):
        order = MonomialOrder.block(2, [7, 5])
        assert compare((1, 0, 0, 0), (0, 0, 9, 9), order) == 1

    def test_length_mismatch(self, ring_7_3):
        with pytest.raises(RingMismatchError):
            compare((1, 0), (0, 1, 0, 0), ring_7_3.default_order())

    def test_order_is_total_and_antisymmetric(self, ring_7_3):
        rng = random.Random(11)
        order = ring_7_3.default_order()
        for _ in range(300):
            m1, m2 = random_monomial(rng, 4), random_monomial(rng, 4)
            assert compare(m1, m2, order) in (-1, 0, 1)
            assert compare(m1, m2, order) == -compare(m2, m1, order)
            assert (compare(m1, m2, order) == 0) == (m1 == m2)

    def test_order_is_transitive(self, ring_7_3):
        rng = random.Random(12)
        order = ring_7_3.default_order()
        for _ in range(300):
            m1, m2, m3 = (random_monomial(rng, 4) for _ in range(3))
            if compare(m1, m2, order) > 0 and compare(m2, m3, order) > 0:
                assert compare(m1, m3, order) > 0, (m1, m2, m3)

    @pytest.mark.parametrize("make_order", [lambda ring: ring.default_order(), lambda ring: MonomialOrder.lex(4)])
    def test_order_is_multiplicative(self, ring_7_3, make_order):
        rng = random.Random(13)
        order = make_order(ring_7_3)
        for _ in range(300):
            m1, m2, m = (random_monomial(rng, 4) for _ in range(3))
            shifted1 = tuple(a + c for a, c in zip(m1, m))
            shifted2 = tuple(a + c for a, c in zip(m2, m))
            assert compare(shifted1, shifted2, order) == compare(m1, m2, order)


class TestRing:
    def test_presentation_ring_names(self):
        ring = presentation_ring([13, 9, 5, 6, 13])
        assert ring.names == ("y_0", "y_1", "y_2", "y_3", "y_4")
        assert ring.degree((1, 0, 2, 0, 0)) == 23

    @pytest.mark.parametrize(
        "names,degrees",
        [(("a", "b"), (1,)), (("a", "b"), (1, 0)), (("a", "a"), (1, 1))],
    )
    def test_invalid_rings(self, names, degrees):
        with pytest.raises(ParameterError):
            GradedRing(names=names, degrees=degrees)


class TestPolynomial:
    def test_parse_and_render(self, ring_7_3):
        f = poly("y_1^2 - y_0*y_2", ring_7_3)
        assert f.to_string() == "y_1^2 - y_0*y_2"
        assert str(poly("-y_0*y_2 + y_1**2", ring_7_3)) == "y_1^2 - y_0*y_2"
        assert str(poly("y_1^2 - 1/2*y_0*y_2", ring_7_3)) == "y_1^2 - 1/2*y_0*y_2"

    @pytest.mark.parametrize("text", ["y_9 + 1", "y_0 +* y_1", "y_0 / y_1"])
    def test_parse_rejects_garbage(self, ring_7_3, text):
        with pytest.raises(ParameterError):
            parse_polynomial(text, ring_7_3)

    def test_arithmetic(self, ring_7_3):
        y0, y1 = ring_7_3.variable(0), ring_7_3.variable(1)
        assert (y0 + y1) ** 2 == y0 * y0 + 2 * y0 * y1 + y1 * y1
        assert (y0 - y0).is_zero()
        assert 1 - y0 == -(y0 - 1)
        assert (y0 * Fraction(1, 3)).coefficient((1, 0, 0, 0)) == Fraction(1, 3)

    def test_negative_power(self, ring_7_3):
        with pytest.raises(DomainError):
            ring_7_3.variable(0) ** -1

    def test_ring_mismatch(self, ring_7_3):
        other = presentation_ring([7, 4, 1, 7])
        with pytest.raises(RingMismatchError):
            ring_7_3.variable(0) + other.variable(0)

    def test_leading_term_and_homogeneity(self, ring_7_3):
        f = poly("y_2^4 - y_1*y_3", ring_7_3)
        assert f.leading_monomial() == (0, 0, 4, 0)
        assert f.homogeneous_degree() == 12
        assert f.is_pure_binomial()
        assert poly("y_0 + y_2", ring_7_3).homogeneous_degree() is None
        assert ring_7_3.zero().is_homogeneous()

    def test_zero_has_no_leading_term(self, ring_7_3):
        with pytest.raises(DomainError):
            ring_7_3.zero().leading_monomial()

    def test_binomial_of_equal_monomials_is_zero(self, ring_7_3):
        assert Polynomial.binomial(ring_7_3, (1, 0, 0, 0), (1, 0, 0, 0)).is_zero()

    def test_ring_axioms(self, ring_7_3):
        rng = random.Random(14)
        for _ in range(40):
            f, g, h = (random_polynomial(rng, ring_7_3) for _ in range(3))
            assert f + g == g + f
            assert f * g == g * f
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert (f - f).is_zero()
            assert f * 1 == f
            assert (f * ring_7_3.zero()).is_zero()

    def test_to_sympy(self, ring_7_3):
        y0, y1, y2 = sympy.symbols("y_0 y_1 y_2")
        assert sympy.expand(to_sympy(poly("y_1^2 - 1/2*y_0*y_2", ring_7_3))) == y1**2 - y0 * y2 / 2


class TestReduction:
    def test_member_reduces_to_zero(self, ring_7_3):
        f = poly("y_1^2 - y_0*y_2", ring_7_3)
        assert normal_form(f, [f]).is_zero()

    def test_irreducible_term_survives(self, ring_7_3):
        f = poly("y_1^2 - y_0*y_2", ring_7_3)
        assert normal_form(ring_7_3.variable(0), [f]) == ring_7_3.variable(0)

    def test_single_step(self, ring_7_3):
        f = poly("y_1^2 - y_0*y_2", ring_7_3)
        assert normal_form(poly("y_1^3", ring_7_3), [f]) == poly("y_0*y_1*y_2", ring_7_3)

    def test_zero_divisors_are_ignored(self, ring_7_3):
        f = poly("y_1^3", ring_7_3)
        assert normal_form(f, [ring_7_3.zero()]) == f

    def test_s_polynomial(self, ring_7_3):
        f = poly("y_1^2 - y_0*y_2", ring_7_3)
        g = poly("y_2^4 - y_1*y_3", ring_7_3)
        assert s_polynomial(f, g) == poly("y_1^3*y_3 - y_0*y_2^5", ring_7_3)
        assert s_polynomial(f, f).is_zero()

    def test_s_polynomial_of_binomials_is_binomial(self, ring_7_3):
        f = poly("y_1*y_2^3 - y_0*y_3", ring_7_3)
        g = poly("y_2^4 - y_1*y_3", ring_7_3)
        s = s_polynomial(f, g)
        assert s.is_zero() or s.is_pure_binomial()

    def test_s_polynomial_rejects_zero(self, ring_7_3):
        with pytest.raises(DomainError):
            s_polynomial(ring_7_3.zero(), ring_7_3.variable(0))

    def test_normal_form_is_idempotent(self, ring_7_3):
        rng = random.Random(15)
        basis = [poly(t, ring_7_3) for t in ("y_1^2 - y_0*y_2", "y_2^4 - y_1*y_3", "y_1*y_2^3 - y_0*y_3")]
        leads = [g.leading_monomial() for g in basis]
        for _ in range(40):
            reduced = normal_form(random_polynomial(rng, ring_7_3), basis)
            assert normal_form(reduced, basis) == reduced
            for mono in reduced.monomials():
                assert not any(all(a <= c for a, c in zip(lead, mono)) for lead in leads)
