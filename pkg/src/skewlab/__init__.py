"""Partial skew group rings of abelian groups acting on finite sets, with
exact simplicity checks."""

__version__ = "0.1.0"

from .action import PartialAction, ValidationReport, validate_action
from .corpus import exhaustive_restrictions, generate_restriction_action, make_shift_window
from .groups import GroupElement, GroupSpec
from .ring import FinSuppFunction, SkewRing, SkewRingElement
from .scalars import GF2, GF3, QQ, FieldScalar, FieldSpec

__all__ = [
    "FieldScalar",
    "FieldSpec",
    "FinSuppFunction",
    "GF2",
    "GF3",
    "GroupElement",
    "GroupSpec",
    "PartialAction",
    "QQ",
    "SkewRing",
    "SkewRingElement",
    "ValidationReport",
    "exhaustive_restrictions",
    "generate_restriction_action",
    "make_shift_window",
    "validate_action",
]
