"""
Parameter sweeps over all canonical actions up to a prime bound.

Each (p, b) with p prime, p <= p_max and 1 <= b <= b_inv is classified
leniently and its invariant set is compared with the brute-force
semigroup. Rows are computed independently, optionally in worker
processes, and always returned in (p, b) order.
"""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from sympy import primerange

from app.algebra.classify import classify
from app.algebra.modarith import mod_inverse
from app.algebra.oracle import brute_semigroup
from app.algebra.semigroup import invariant_generators
from app.core.config import settings
from app.core.errors import ParameterError
from app.core.logging import get_logger, get_sweep_logger
from app.models.classification import SweepRead, SweepRow

logger = get_logger(__name__)


def sweep_points(p_max: int) -> List[Tuple[int, int]]:
    """
    Canonical (p, b) pairs with p <= p_max.

    Raises:
        ParameterError: If p_max is below 2 or above settings.pmax_limit
    """
    if p_max < 2:
        raise ParameterError(f"p_max must be at least 2, got {p_max}")
    if p_max > settings.pmax_limit:
        raise ParameterError(
            f"p_max {p_max} exceeds the configured limit {settings.pmax_limit} (CYCINV_PMAX_LIMIT)"
        )
    return [
        (p, b)
        for p in primerange(2, p_max + 1)
        for b in range(1, p)
        if b <= mod_inverse(b, p)
    ]


def sweep_row(point: Tuple[int, int]) -> SweepRow:
    """Classify one canonical action and cross-check its invariant set."""
    p, b = point
    label = classify(p, b, strict=False)
    extra = []
    if invariant_generators(p, b).points != brute_semigroup(p, b).points:
        extra.append("invariant set differs from brute-force semigroup")
    return SweepRow.from_label(label, extra)


async def run_sweep(p_max: int, jobs: Optional[int] = None) -> SweepRead:
    """
    Sweep every canonical action with p <= p_max.

    Args:
        p_max: Largest prime considered
        jobs: Worker processes; 1 computes inline (default settings.sweep_jobs)

    Returns:
        SweepRead with rows in (p, b) order

    Raises:
        ParameterError: If p_max or jobs is out of range
    """
    jobs = settings.sweep_jobs if jobs is None else jobs
    if jobs < 1:
        raise ParameterError(f"jobs must be at least 1, got {jobs}")
    points = sweep_points(p_max)
    logger.info(f"Sweeping {len(points)} actions up to p={p_max} with {jobs} worker(s)")

    if jobs == 1:
        rows = [sweep_row(point) for point in points]
    else:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tasks = [loop.run_in_executor(pool, sweep_row, point) for point in points]
            rows = list(await asyncio.gather(*tasks))

    sweep_logger = get_sweep_logger()
    violations = 0
    for row in rows:
        if row.violations:
            violations += 1
            sweep_logger.error(
                f"p={row.p} b={row.b}: {'; '.join(row.violations)} | {row.model_dump(exclude={'violations'})}"
            )
    if violations:
        logger.warning(f"{violations} row(s) failed a theorem check")
    else:
        logger.info(f"All {len(rows)} rows passed")
    return SweepRead(p_max=p_max, rows=rows, violations=violations)


def sweep(p_max: int, jobs: Optional[int] = None) -> SweepRead:
    """Synchronous entry point for run_sweep."""
    return asyncio.run(run_sweep(p_max, jobs))
