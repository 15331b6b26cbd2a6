"""Tests for free resolutions, Betti tables and the closed-form constructions."""

import pytest
from sympy import primerange

from app.algebra.classify import product_invariant
from app.algebra.groebner import Ideal, ideal_equal, toric_kernel
from app.algebra.polyalg import parse_polynomial, presentation_ring
from app.algebra.resolution import (
    GradedFreeModule,
    PolyMatrix,
    Resolution,
    betti,
    determinantal_ideal,
    eagon_northcott,
    explicit_kernel_2p1,
    explicit_kernel_codim2,
    hilbert_burch,
    hilbert_series_coefficients,
    maximal_minors_3x2,
    minimal_free_resolution,
    minimize,
    schreyer_resolution,
)
from app.algebra.modarith import mod_inverse
from app.algebra.semigroup import invariant_generators
from app.core.errors import ClassificationError, InhomogeneousIdealError, ParameterError

TWISTS_7_3 = [[0], [10, 12, 14], [17, 19]]
TWISTS_13_4 = [
    [0],
    [14, 17, 20, 20, 23, 26],
    [24, 27, 27, 30, 30, 33, 33, 36],
    [37, 40, 43],
]
TWISTS_13_5 = [
    [0],
    [15, 18, 18, 19, 22, 26],
    [24, 27, 28, 28, 31, 31, 32, 35],
    [37, 40, 41],
]


def kernel(p, b):
    return toric_kernel(invariant_generators(p, b))


def points_with_product(k, p_max=100):
    """Canonical (p, b) with (p-b)(p-b_inv) = pk + 1."""
    return [
        (p, b)
        for p in primerange(3, p_max + 1)
        for b in range(1, p)
        if b <= mod_inverse(b, p) and product_invariant(p, b)[1] == k
    ]


def assert_complex(res):
    for i in range(len(res.differentials) - 1):
        assert (res.differentials[i] @ res.differentials[i + 1]).is_zero()


def assert_minimal_and_graded(res):
    for d in res.differentials:
        assert d.unit_entries() == []
        assert d.inhomogeneous_entries() == []


class TestMinimalResolution:
    def test_seven_three(self):
        res = minimal_free_resolution(kernel(7, 3))
        assert res.twist_multisets() == TWISTS_7_3
        assert res.ranks == [1, 3, 2]
        assert_complex(res)
        assert_minimal_and_graded(res)

    def test_thirteen_four(self):
        res = minimal_free_resolution(kernel(13, 4))
        assert res.twist_multisets() == TWISTS_13_4
        assert res.length == 3
        assert_complex(res)
        assert_minimal_and_graded(res)

    def test_thirteen_five(self):
        res = minimal_free_resolution(kernel(13, 5))
        assert res.twist_multisets() == TWISTS_13_5

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_principal(self, p):
        res = minimal_free_resolution(kernel(p, p - 1))
        assert res.twist_multisets() == [[0], [2 * p]]

    def test_twists_are_sorted(self):
        res = minimal_free_resolution(kernel(11, 3))
        for module in res.modules:
            assert list(module.twists) == sorted(module.twists)
        assert res.length == len(invariant_generators(11, 3)) - 2
        assert_complex(res)

    def test_schreyer_is_a_complex_before_minimizing(self):
        res = schreyer_resolution(kernel(7, 3))
        assert_complex(res)
        assert res.ranks[1] == 3

    def test_veronese_is_linear(self):
        res = minimal_free_resolution(kernel(7, 1))
        assert res.ranks == [1, 21, 70, 105, 84, 35, 6]
        assert res.twist_multisets()[1:] == [[7 * (i + 1)] * rank for i, rank in enumerate(res.ranks[1:], 1)]
        assert_minimal_and_graded(res)

    def test_minimize_splits_off_unit_summand(self):
        ring = presentation_ring([1, 1])
        y0 = ring.variable(0)
        one = ring.monomial((0, 0), 1)
        d1 = PolyMatrix(ring, [[y0, y0]], [0], [1, 1])
        d2 = PolyMatrix(ring, [[one], [-one]], [1, 1], [1])
        res = Resolution(ring, [GradedFreeModule((0,)), GradedFreeModule((1, 1)), GradedFreeModule((1,))], [d1, d2])
        assert_complex(res)
        small = minimize(res)
        assert small.twist_multisets() == [[0], [1]]
        assert small.differentials[0].to_strings() == [["y_0"]]

    def test_inhomogeneous_ideal(self, ring_7_3):
        ideal = Ideal(ring_7_3, (parse_polynomial("y_0 + y_2", ring_7_3),))
        with pytest.raises(InhomogeneousIdealError):
            minimal_free_resolution(ideal)


class TestBetti:
    def test_seven_three(self):
        table = betti(minimal_free_resolution(kernel(7, 3)))
        assert table.column(0) == {0: 1}
        assert table.column(1) == {10: 1, 12: 1, 14: 1}
        assert table.column(2) == {17: 1, 19: 1}
        assert table.length == 2

    def test_thirteen_five(self):
        table = betti(minimal_free_resolution(kernel(13, 5)))
        assert table.column(1) == {15: 1, 18: 2, 19: 1, 22: 1, 26: 1}
        assert table.column(2) == {24: 1, 27: 1, 28: 2, 31: 2, 32: 1, 35: 1}
        assert table.column(3) == {37: 1, 40: 1, 41: 1}

    def test_zero_ideal(self, ring_7_3):
        res = schreyer_resolution(Ideal(ring_7_3, ()))
        assert betti(res).as_dict() == {(0, 0): 1}


class TestHilbertSeries:
    def test_codim2_series_counts_invariants(self):
        res = minimal_free_resolution(kernel(7, 3))
        series = hilbert_series_coefficients(res, 21)
        expected = [sum(1 for d in range(n + 1) if ((n - d) + 3 * d) % 7 == 0) for n in range(22)]
        assert series == expected

    def test_polynomial_ring(self):
        ring = presentation_ring([1, 1])
        res = Resolution(ring, [GradedFreeModule((0,))])
        assert hilbert_series_coefficients(res, 4) == [1, 2, 3, 4, 5]


class TestHilbertBurch:
    def test_seven_three(self):
        matrix, res = hilbert_burch(7, 3)
        assert res.twist_multisets() == TWISTS_7_3
        assert_complex(res)
        assert_minimal_and_graded(res)
        assert ideal_equal(explicit_kernel_codim2(7, 3), kernel(7, 3))

    def test_five_two_matrix(self):
        matrix, _ = hilbert_burch(5, 2)
        assert matrix.to_strings() == [["-y_3", "-y_2^2"], ["-y_1", "-y_0"], ["y_2", "y_1"]]

    @pytest.mark.parametrize("p,b", points_with_product(1))
    def test_minors_generate_kernel(self, p, b):
        assert ideal_equal(explicit_kernel_codim2(p, b), kernel(p, b))
        matrix, _ = hilbert_burch(p, b)
        minors = Ideal(matrix.ring, tuple(maximal_minors_3x2(matrix)))
        assert ideal_equal(minors, kernel(p, b))

    def test_precondition(self):
        with pytest.raises(ClassificationError):
            explicit_kernel_codim2(17, 10)
        with pytest.raises(ClassificationError):
            hilbert_burch(13, 4)


class TestEagonNorthcott:
    def test_thirteen_four(self):
        ideal, matrix = explicit_kernel_2p1(13, 4)
        assert matrix.to_strings() == [["y_0", "y_1", "y_2", "y_3^4"], ["y_1", "y_2", "y_3", "y_4"]]
        res = eagon_northcott(matrix)
        assert res.ranks == [1, 6, 8, 3]
        assert res.twist_multisets() == TWISTS_13_4
        assert_complex(res)
        assert_minimal_and_graded(res)

    @pytest.mark.parametrize("p,b", points_with_product(2))
    def test_kernels_and_minors(self, p, b):
        ideal, matrix = explicit_kernel_2p1(p, b)
        expected = kernel(p, b)
        assert ideal_equal(ideal, expected)
        assert ideal_equal(determinantal_ideal(matrix), expected)

    def test_upper_branch_matches_general(self):
        _, matrix = explicit_kernel_2p1(17, 10)
        closed = eagon_northcott(matrix)
        general = minimal_free_resolution(kernel(17, 10))
        assert closed.twist_multisets() == general.twist_multisets()
        assert_complex(closed)

    def test_generic_two_by_three(self):
        ring = presentation_ring([1, 1, 1, 1])
        y = [ring.variable(i) for i in range(4)]
        matrix = PolyMatrix(ring, [[y[0], y[1], y[2]], [y[1], y[2], y[3]]], [0, 0], [1, 1, 1])
        res = eagon_northcott(matrix)
        assert res.ranks == [1, 3, 2]
        assert res.twist_multisets() == [[0], [2, 2, 2], [3, 3]]
        assert_complex(res)

    def test_precondition(self):
        with pytest.raises(ClassificationError):
            explicit_kernel_2p1(7, 3)

    def test_shape(self):
        ring = presentation_ring([1, 1])
        y = [ring.variable(i) for i in range(2)]
        with pytest.raises(ParameterError):
            eagon_northcott(PolyMatrix(ring, [[y[0], y[1]], [y[1], y[0]]], [0, 0], [1, 1]))
