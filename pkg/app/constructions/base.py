"""
Abstract base class for resolution constructions.

Every way of producing the minimal free resolution of a presentation ring
is a plug-in deriving from ResolutionMethod. Plug-ins declare which
classification labels they apply to; the general Schreyer method applies
to every label, the closed forms only to their class.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

from app.algebra.classify import ClassKind, ClassLabel, classify
from app.algebra.groebner import Ideal, toric_kernel
from app.algebra.resolution import Resolution
from app.algebra.semigroup import Action, CanonicalAction, InvariantSet, action_invariants, normalize
from app.core.logging import get_logger

logger = get_logger(__name__)


@dataclass
class ConstructionContext:
    """
    Everything a construction may need about one action.

    The invariant set, kernel and resolution describe the action as given
    (weight `weight` after reducing a to 1); the label describes its
    canonical form.
    """

    action: Action
    canonical: CanonicalAction
    inv: InvariantSet
    label: ClassLabel
    _kernel: Optional[Ideal] = field(default=None, repr=False)

    @classmethod
    def for_action(cls, p: int, a: int, b: int) -> "ConstructionContext":
        """
        Build the context of (p, a, b).

        Raises:
            ParameterError: If the action is invalid
            TheoremViolationError: If classification fails a cross-check
        """
        action = Action(p=p, a=a, b=b)
        return cls(
            action=action,
            canonical=normalize(action),
            inv=action_invariants(action),
            label=classify(p, b, a=a),
        )

    @property
    def p(self) -> int:
        return self.action.p

    @property
    def weight(self) -> int:
        return self.canonical.reduced_weight

    @property
    def kernel(self) -> Ideal:
        """Toric kernel, computed on first use."""
        if self._kernel is None:
            self._kernel = toric_kernel(self.inv)
        return self._kernel


class ResolutionMethod(ABC):
    """
    Abstract base class for resolution constructions.

    Attributes:
        name: Name used by `--method` and the HTTP API
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the method name."""

    @property
    def closed_form(self) -> bool:
        """Return True for constructions given by explicit formulas."""
        return True

    @abstractmethod
    def applies_to(self, kind: ClassKind) -> bool:
        """
        Decide whether the construction is valid for a classification.

        Args:
            kind: Classification label of the canonical action
        """

    @abstractmethod
    def build(self, ctx: ConstructionContext) -> Resolution:
        """
        Produce the resolution of the presentation ring of ctx.

        Args:
            ctx: Action context

        Returns:
            Resolution with twists sorted ascending in every module
        """
