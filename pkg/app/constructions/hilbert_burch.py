"""
Hilbert-Burch construction for actions with (p-b)(p-b_inv) = p+1.

The kernel then has exactly three binomial generators, the signed maximal
minors of a 3 x 2 matrix, and the complex R <- R^3 <- R^2 is minimal.
"""

from app.algebra.classify import ClassKind
from app.algebra.resolution import Resolution, hilbert_burch, sort_twists
from app.constructions.base import ConstructionContext, ResolutionMethod
from app.core.logging import get_logger

logger = get_logger(__name__)


class HilbertBurchMethod(ResolutionMethod):
    """
    Codimension-two resolution from the explicit 3 x 2 matrix.

    F_1 twists are 2p-b_inv+1, 2p-b+1 and 2p; F_2 twists are 3p-b_inv+1
    and 3p-b+1.
    """

    @property
    def name(self) -> str:
        return "hilbert-burch"

    def applies_to(self, kind: ClassKind) -> bool:
        return kind is ClassKind.CODIM2

    def build(self, ctx: ConstructionContext) -> Resolution:
        _, res = hilbert_burch(ctx.p, ctx.weight)
        logger.debug(f"[{self.name}] F_1 twists {list(res.modules[1].twists)}")
        return sort_twists(res)
