"""Tests for parameter sweeps."""

import pytest

from app import sweep as sweep_module
from app.algebra.semigroup import invariant_generators
from app.core.config import settings
from app.core.errors import ParameterError
from app.sweep import sweep, sweep_points, sweep_row


class TestSweepPoints:
    def test_small_range(self):
        assert sweep_points(7) == [
            (2, 1), (3, 1), (3, 2), (5, 1), (5, 2), (5, 4),
            (7, 1), (7, 2), (7, 3), (7, 6),
        ]

    def test_canonical_only(self):
        for p, b in sweep_points(31):
            assert b <= pow(b, -1, p)

    def test_lower_bound(self):
        with pytest.raises(ParameterError):
            sweep_points(1)

    def test_configured_limit(self, monkeypatch):
        monkeypatch.setattr(settings, "pmax_limit", 50)
        with pytest.raises(ParameterError, match="CYCINV_PMAX_LIMIT"):
            sweep_points(60)


def test_row_for_general_counterexample():
    row = sweep_row((13, 5))
    assert row.label == "General"
    assert (row.product, row.k, row.n_invariants) == (40, 3, 5)
    assert row.violations == []
    assert row.csv_values() == ["13", "5", "8", "40", "3", "5", "3", "2", "3", "1", "5", "General"]


def test_sweep_to_one_hundred_is_clean():
    result = sweep(100, jobs=1)
    assert result.violations == 0
    assert result.p_max == 100
    keys = [(row.p, row.b) for row in result.rows]
    assert keys == sorted(keys)
    for row in result.rows:
        assert (row.n_invariants == 4) == (row.product == row.p + 1)
        if row.label == "TwoSlope":
            assert row.n_slopes == 2


def test_worker_processes_give_identical_rows():
    assert sweep(23, jobs=2) == sweep(23, jobs=1)


def test_invalid_jobs():
    with pytest.raises(ParameterError):
        sweep(7, jobs=0)


def test_brute_force_mismatch_is_recorded(monkeypatch):
    monkeypatch.setattr(sweep_module, "brute_semigroup", lambda p, b: invariant_generators(p, 1))
    result = sweep(5, jobs=1)
    # b = 1 rows still agree
    assert result.violations == 3
    flagged = [(row.p, row.b) for row in result.rows if row.violations]
    assert flagged == [(3, 2), (5, 2), (5, 4)]
