"""
Resolution construction plug-in system.

Plug-ins are discovered by scanning this package for ResolutionMethod
subclasses; only modules listed in settings.enabled_methods are loaded.
"""

import importlib
import inspect
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, Tuple

from app.algebra.resolution import Resolution
from app.constructions.base import ConstructionContext, ResolutionMethod
from app.core.config import settings
from app.core.errors import MethodNotApplicableError, ParameterError, TheoremViolationError
from app.core.logging import get_logger

logger = get_logger(__name__)

AUTO = "auto"

__all__ = [
    "AUTO",
    "ConstructionContext",
    "ResolutionMethod",
    "build_resolution",
    "load_resolution_methods",
    "method_names",
]


@lru_cache(maxsize=1)
def load_resolution_methods() -> Dict[str, ResolutionMethod]:
    """
    Dynamically load resolution constructions from this package.

    Returns:
        Method name -> instantiated construction
    """
    methods: Dict[str, ResolutionMethod] = {}
    package_path = Path(__file__).parent

    for module_file in sorted(package_path.glob("*.py")):
        if module_file.stem in ["__init__", "base"]:
            continue

        if module_file.stem not in settings.enabled_methods:
            logger.info(f"Skipping disabled construction: {module_file.stem}")
            continue

        module_name = f"app.constructions.{module_file.stem}"
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            logger.error(f"Failed to load construction {module_file.stem}: {e}", exc_info=True)
            continue

        for _, obj in inspect.getmembers(module, inspect.isclass):
            if (issubclass(obj, ResolutionMethod) and
                    obj is not ResolutionMethod and
                    obj.__module__ == module_name):
                method = obj()
                methods[method.name] = method
                logger.debug(f"Loaded construction: {method.name}")

    return methods


def method_names() -> Tuple[str, ...]:
    """Names accepted by build_resolution, `auto` included."""
    return tuple(sorted(load_resolution_methods())) + (AUTO,)


def _closed_form_for(ctx: ConstructionContext) -> Optional[ResolutionMethod]:
    for method in load_resolution_methods().values():
        if method.closed_form and method.applies_to(ctx.label.kind):
            return method
    return None


def build_resolution(ctx: ConstructionContext, method: str = AUTO) -> Tuple[str, Resolution]:
    """
    Build the resolution of ctx with the named construction.

    `auto` uses the closed form valid for the action's class when one is
    loaded and checks its twist multisets against the general construction;
    otherwise it falls back to the general construction.

    Args:
        ctx: Action context
        method: Construction name or `auto`

    Returns:
        (name of the construction used, resolution)

    Raises:
        ParameterError: If the method is unknown or not loaded
        MethodNotApplicableError: If the method does not apply to the class
        TheoremViolationError: If `auto` finds the closed form disagreeing
    """
    methods = load_resolution_methods()
    kind = ctx.label.kind

    if method == AUTO:
        closed = _closed_form_for(ctx)
        general = methods.get("general")
        if closed is None:
            if general is None:
                raise ParameterError("no construction applies and `general` is not loaded")
            return general.name, general.build(ctx)

        res = closed.build(ctx)
        if general is not None:
            reference = general.build(ctx)
            if res.twist_multisets() != reference.twist_multisets():
                evidence = ctx.label.evidence.as_dict()
                evidence["method"] = closed.name
                raise TheoremViolationError(
                    f"{closed.name} twists {res.twist_multisets()} differ from "
                    f"general twists {reference.twist_multisets()}",
                    evidence,
                )
            logger.info(f"{closed.name} agrees with general for p={ctx.p}, b={ctx.weight}")
        return closed.name, res

    chosen = methods.get(method)
    if chosen is None:
        raise ParameterError(f"unknown method {method!r}; choose from {', '.join(method_names())}")
    if not chosen.applies_to(kind):
        raise MethodNotApplicableError(f"{method} does not apply: class is {kind.value}")
    return chosen.name, chosen.build(ctx)
