"""
cycinv command-line interface.

Exit codes: 0 success, 1 usage or parameter error, 2 computation error,
3 theorem violation or failed verification.
"""

from pathlib import Path
from typing import Any, Callable, Optional

import click

from app import __version__
from app.constructions import AUTO
from app.core.config import settings
from app.core.errors import CycinvError, ParameterError, TheoremViolationError
from app.core.logging import get_logger
from app.render import FORMATS, render
from app.services import (
    compute_classification,
    compute_invariants,
    compute_kernel,
    compute_resolution,
    compute_verification,
)
from app.sweep import sweep as run_sweep

logger = get_logger(__name__)

EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_VIOLATION = 3


class CycinvGroup(click.Group):
    """Command group translating library errors into exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise
        except TheoremViolationError as e:
            click.echo(f"Error: theorem violation: {e}", err=True)
            ctx.exit(EXIT_VIOLATION)
        except ParameterError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_USAGE)
        except CycinvError as e:
            logger.error(f"computation failed: {e}", exc_info=settings.debug)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_COMPUTATION)


def action_options(func: Callable) -> Callable:
    """Attach --p, --a and --b."""
    func = click.option("--b", "b", type=int, required=True, help="Weight of x2")(func)
    func = click.option("--a", "a", type=int, default=1, show_default=True, help="Weight of x1")(func)
    func = click.option("--p", "p", type=int, required=True, help="Prime group order")(func)
    return func


def format_option(func: Callable) -> Callable:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default=settings.default_format,
        show_default=True,
        help="Output format",
    )(func)


@click.group(cls=CycinvGroup)
@click.version_option(__version__, prog_name="cycinv")
def cli() -> None:
    """Invariant rings of cyclic group actions on two variables."""


@cli.command()
@action_options
@format_option
def invariants(p: int, a: int, b: int, fmt: str) -> None:
    """Minimal generating invariant monomials with degrees and slopes."""
    click.echo(render(compute_invariants(p, a, b), fmt))


@cli.command()
@action_options
@click.option("--reduced", is_flag=True, help="Also print the reduced Groebner basis")
@format_option
def kernel(p: int, a: int, b: int, reduced: bool, fmt: str) -> None:
    """Binomial generators of the presentation kernel."""
    click.echo(render(compute_kernel(p, a, b, reduced=reduced), fmt))


@cli.command()
@action_options
@click.option(
    "--method",
    default=AUTO,
    show_default=True,
    help="general, hilbert-burch, eagon-northcott or auto",
)
@click.option("--matrices", is_flag=True, help="Print the differential matrices")
@format_option
def resolution(p: int, a: int, b: int, method: str, matrices: bool, fmt: str) -> None:
    """Minimal graded free resolution and Betti table."""
    click.echo(render(compute_resolution(p, a, b, method=method, matrices=matrices), fmt))


@cli.command()
@action_options
@format_option
def classify(p: int, a: int, b: int, fmt: str) -> None:
    """Classification label with its numeric evidence."""
    click.echo(render(compute_classification(p, a, b), fmt))


@cli.command()
@action_options
@format_option
@click.pass_context
def verify(ctx: click.Context, p: int, a: int, b: int, fmt: str) -> None:
    """Check the general resolution against independent oracles."""
    report = compute_verification(p, a, b)
    click.echo(render(report, fmt))
    if not report.passed:
        ctx.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--p-max", "p_max", type=int, required=True, help="Largest prime to sweep")
@click.option("--jobs", type=int, default=None, help="Worker processes (default CYCINV_SWEEP_JOBS)")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMATS),
    default="csv",
    show_default=True,
    help="Output format",
)
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write to this file instead of stdout")
@click.pass_context
def sweep(ctx: click.Context, p_max: int, jobs: Optional[int], fmt: str, output: Optional[Path]) -> None:
    """Classify every canonical action up to p_max and check each row."""
    result = run_sweep(p_max, jobs)
    text = render(result, fmt)
    if output is None:
        click.echo(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")
        click.echo(f"Wrote {len(result.rows)} rows to {output}", err=True)
    if result.violations:
        click.echo(f"Error: {result.violations} row(s) violate a theorem check", err=True)
        ctx.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--host", default=settings.host, show_default=True)
@click.option("--port", type=int, default=settings.api_port, show_default=True)
def serve(host: str, port: int) -> None:
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run(
        "app.main:app",
        host=host,
        port=port,
        reload=settings.debug,
        log_level="info",
    )


def main() -> None:
    cli(prog_name="cycinv")


if __name__ == "__main__":
    main()
