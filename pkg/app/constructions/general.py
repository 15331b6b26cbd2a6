"""
General construction: Schreyer syzygies of the toric kernel, minimised.

Applies to every class; it is also the reference the closed forms are
cross-checked against.
"""

from app.algebra.classify import ClassKind
from app.algebra.resolution import Resolution, minimal_free_resolution
from app.constructions.base import ConstructionContext, ResolutionMethod
from app.core.logging import get_logger

logger = get_logger(__name__)


class GeneralMethod(ResolutionMethod):
    """Minimal free resolution computed from a Groebner basis of the kernel."""

    @property
    def name(self) -> str:
        return "general"

    @property
    def closed_form(self) -> bool:
        return False

    def applies_to(self, kind: ClassKind) -> bool:
        return True

    def build(self, ctx: ConstructionContext) -> Resolution:
        logger.debug(f"[{self.name}] resolving kernel of inv({ctx.p},{ctx.weight})")
        return minimal_free_resolution(ctx.kernel)
