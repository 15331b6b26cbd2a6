"""Tests for the brute-force oracles and resolution verification."""

from dataclasses import replace

import pytest

from app.algebra.groebner import toric_kernel
from app.algebra.oracle import (
    brute_semigroup,
    hilbert_count_invariants,
    kernel_membership,
    standard_log_values,
    verify_resolution,
)
from app.algebra.polyalg import parse_polynomial, presentation_ring
from app.algebra.resolution import hilbert_burch, minimal_free_resolution
from app.algebra.semigroup import invariant_generators
from app.constructions import ConstructionContext, build_resolution
from app.core.errors import ParameterError, RingMismatchError

VALIDITY_CASES = [
    (2, 1), (3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (5, 4),
    (7, 2), (7, 3), (7, 4), (7, 6), (11, 3), (11, 4), (11, 5), (11, 10),
    (13, 3), (13, 4), (13, 5), (13, 6), (13, 10), (13, 12),
    (17, 10), (17, 16), (19, 6), (23, 11),
]


class TestBruteSemigroup:
    def test_seven_three(self):
        assert [(pt.c, pt.d) for pt in brute_semigroup(7, 3)] == [(7, 0), (4, 1), (1, 2), (0, 7)]

    @pytest.mark.parametrize("p", [3, 7, 13])
    def test_anti_diagonal(self, p):
        assert len(brute_semigroup(p, p - 1)) == 3

    def test_invalid(self):
        with pytest.raises(ParameterError):
            brute_semigroup(8, 3)


class TestKernelMembership:
    def test_members(self, ring_7_3):
        inv = invariant_generators(7, 3)
        assert kernel_membership(parse_polynomial("y_1^2 - y_0*y_2", ring_7_3), inv)
        assert kernel_membership(parse_polynomial("y_2^4 - y_1*y_3", ring_7_3), inv)

    def test_non_members(self, ring_7_3):
        inv = invariant_generators(7, 3)
        assert not kernel_membership(ring_7_3.variable(0), inv)
        assert not kernel_membership(parse_polynomial("y_1^2 - y_0*y_3", ring_7_3), inv)

    def test_ring_mismatch(self):
        ring = presentation_ring([1, 1])
        with pytest.raises(RingMismatchError):
            kernel_membership(ring.variable(0), invariant_generators(7, 3))


class TestHilbertCount:
    def test_values(self):
        assert hilbert_count_invariants(7, 3, 0) == 1
        assert hilbert_count_invariants(7, 3, 7) == 2
        assert hilbert_count_invariants(7, 3, 1) == 0

    @pytest.mark.parametrize("p", [2, 5, 11])
    def test_veronese_degree_p(self, p):
        assert hilbert_count_invariants(p, 1, p) == p + 1

    def test_negative_degree(self):
        with pytest.raises(ParameterError):
            hilbert_count_invariants(7, 3, -1)


class TestVerifyResolution:
    @pytest.mark.parametrize("p,b", VALIDITY_CASES)
    def test_general_resolution_passes(self, p, b):
        ctx = ConstructionContext.for_action(p, 1, b)
        _, res = build_resolution(ctx, "general")
        report = verify_resolution(res, ctx.kernel, ctx.inv)
        assert report.passed, report.details

    @pytest.mark.parametrize("p,b", [(7, 3), (13, 4), (17, 10), (13, 10)])
    def test_closed_forms_pass(self, p, b):
        ctx = ConstructionContext.for_action(p, 1, b)
        used, res = build_resolution(ctx)
        assert used != "general"
        assert verify_resolution(res, ctx.kernel, ctx.inv).passed

    def test_broken_sign_is_reported(self):
        inv = invariant_generators(5, 2)
        _, res = hilbert_burch(5, 2)
        d2 = res.differentials[1]
        entries = [list(row) for row in d2.entries]
        entries[0][0] = -entries[0][0]
        broken = replace(res, differentials=[res.differentials[0], replace(d2, entries=entries)])
        report = verify_resolution(broken, toric_kernel(inv), inv)
        assert not report.passed
        assert "complex" in report.failures()
        assert "complex" in report.details

    def test_truncated_resolution_has_wrong_length(self):
        inv = invariant_generators(7, 3)
        kernel = toric_kernel(inv)
        res = minimal_free_resolution(kernel)
        short = replace(res, modules=res.modules[:2], differentials=res.differentials[:1])
        report = verify_resolution(short, kernel, inv)
        assert "length" in report.failures()
        assert report.checks["generates"]


class TestStandardLogValues:
    @pytest.mark.parametrize("p,b", [(7, 3), (11, 5), (13, 4), (19, 6), (17, 10)])
    def test_closed_form_classes_hit_every_residue(self, p, b):
        inv = invariant_generators(p, b)
        assert standard_log_values(toric_kernel(inv), inv) == list(range(p))

