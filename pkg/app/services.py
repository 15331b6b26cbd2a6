"""
Computations behind the CLI commands and the HTTP endpoints.

Each function validates its parameters through the algebra layer and
returns a response schema from app.models.
"""

from app.algebra.classify import classify
from app.algebra.oracle import verify_resolution
from app.algebra.semigroup import Action, action_invariants
from app.constructions import AUTO, ConstructionContext, build_resolution, load_resolution_methods
from app.core.errors import ParameterError
from app.core.logging import get_logger
from app.models import ClassificationRead, InvariantSetRead, KernelRead, ResolutionRead, VerificationRead

logger = get_logger(__name__)


def compute_invariants(p: int, a: int, b: int) -> InvariantSetRead:
    """Invariant set of the action as given."""
    action = Action(p=p, a=a, b=b)
    return InvariantSetRead.from_invariants(action, action_invariants(action))


def compute_kernel(p: int, a: int, b: int, reduced: bool = False) -> KernelRead:
    """Minimal generators of the toric kernel, and its reduced basis on request."""
    ctx = ConstructionContext.for_action(p, a, b)
    return KernelRead.from_ideal(ctx.action, ctx.inv, ctx.kernel, reduced=reduced)


def compute_resolution(p: int, a: int, b: int, method: str = AUTO, matrices: bool = False) -> ResolutionRead:
    """
    Minimal free resolution built by the named construction.

    Raises:
        ParameterError: If the method is unknown
        MethodNotApplicableError: If the method does not apply to the class
        TheoremViolationError: If `auto` finds a disagreement
    """
    ctx = ConstructionContext.for_action(p, a, b)
    used, res = build_resolution(ctx, method)
    logger.info(f"resolution of p={p} a={a} b={b} via {used}: ranks {res.ranks}")
    return ResolutionRead.from_resolution(
        ctx.action, ctx.weight, used, ctx.label.kind.value, res, matrices=matrices
    )


def compute_verification(p: int, a: int, b: int) -> VerificationRead:
    """Run every resolution check on the general construction."""
    ctx = ConstructionContext.for_action(p, a, b)
    general = load_resolution_methods().get("general")
    if general is None:
        raise ParameterError("verification needs the `general` construction to be enabled")
    report = verify_resolution(general.build(ctx), ctx.kernel, ctx.inv)
    return VerificationRead.from_report(ctx.action, ctx.weight, report)


def compute_classification(p: int, a: int, b: int) -> ClassificationRead:
    """
    Classify the action; a failed theorem check raises.

    Raises:
        TheoremViolationError: If a cross-check fails
    """
    return ClassificationRead.from_label(p, a, b, classify(p, b, a=a))
