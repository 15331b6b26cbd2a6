"""
Eagon-Northcott construction for actions with (p-b)(p-b_inv) = 2p+1.

The kernel is the ideal of 2 x 2 minors of a 2 x 4 matrix whose shape
depends on the branch (2b < p-1 or not); its Eagon-Northcott complex has
ranks 1, 6, 8, 3.
"""

from app.algebra.classify import ClassKind
from app.algebra.resolution import Resolution, eagon_northcott, explicit_kernel_2p1
from app.constructions.base import ConstructionContext, ResolutionMethod
from app.core.logging import get_logger

logger = get_logger(__name__)


class EagonNorthcottMethod(ResolutionMethod):
    """Resolution of a determinantal kernel from its 2 x 4 matrix."""

    @property
    def name(self) -> str:
        return "eagon-northcott"

    def applies_to(self, kind: ClassKind) -> bool:
        return kind in (ClassKind.FIVE_GEN_2P1_LOWER, ClassKind.FIVE_GEN_2P1_UPPER)

    def build(self, ctx: ConstructionContext) -> Resolution:
        _, matrix = explicit_kernel_2p1(ctx.p, ctx.weight)
        logger.debug(f"[{self.name}] matrix {matrix.to_strings()}")
        return eagon_northcott(matrix)
