"""
Exception hierarchy for cycinv.

Every error raised on purpose by the library derives from CycinvError so
the CLI and the HTTP service can map it to an exit code or status code.
"""

from typing import Any, Dict, Optional


class CycinvError(Exception):
    """Base class for all cycinv errors."""


class ParameterError(CycinvError, ValueError):
    """Invalid user-supplied parameter (p, a, b, degree, sweep bound)."""


class DomainError(CycinvError, ArithmeticError):
    """Operation undefined for its input, e.g. inverting zero mod p."""


class RingMismatchError(CycinvError, ValueError):
    """Operands live in different polynomial rings."""


class InhomogeneousIdealError(CycinvError, ValueError):
    """A graded construction received an inhomogeneous generator."""


class ClassificationError(CycinvError, ValueError):
    """A closed-form construction was requested outside its class."""


class MethodNotApplicableError(ParameterError):
    """The requested resolution method does not apply to the action's class."""


class TheoremViolationError(CycinvError):
    """
    A cross-check contradicted a proved statement.

    Attributes:
        evidence: Numeric data describing the failing case
    """

    def __init__(self, message: str, evidence: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.evidence: Dict[str, Any] = dict(evidence or {})

    def __str__(self) -> str:
        base = super().__str__()
        if not self.evidence:
            return base
        details = ", ".join(f"{key}={value}" for key, value in self.evidence.items())
        return f"{base} [{details}]"
