"""Shared fixtures for the cycinv test suite."""

from typing import Callable, Iterable

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from app.algebra.groebner import Ideal
from app.algebra.polyalg import GradedRing, parse_polynomial, presentation_ring
from app.constructions import load_resolution_methods
from app.core.config import settings


@pytest.fixture
def ring_7_3() -> GradedRing:
    """Presentation ring of inv(7, 3), degrees 7, 5, 3, 7."""
    return presentation_ring([7, 5, 3, 7])


@pytest.fixture
def ideal_of() -> Callable[[Iterable[str], GradedRing], Ideal]:
    """Build an ideal from polynomial strings such as 'y_1^2 - y_0*y_2'."""

    def build(texts: Iterable[str], ring: GradedRing) -> Ideal:
        return Ideal(ring=ring, generators=tuple(parse_polynomial(t, ring) for t in texts))

    return build


@pytest.fixture
def cli_runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


@pytest.fixture
def api_client():
    from app.main import app

    with TestClient(app) as client:
        yield client


@pytest.fixture
def enabled_methods(monkeypatch):
    """Restrict the loaded constructions for one test."""

    def restrict(*names: str) -> None:
        monkeypatch.setattr(settings, "enabled_methods", list(names))
        load_resolution_methods.cache_clear()

    yield restrict
    load_resolution_methods.cache_clear()
