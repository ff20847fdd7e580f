from __future__ import annotations
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .graph import DoubleStarWitness


class PlanTuranError(Exception):
    """
    Base class of every error this package raises on purpose
    """


class GuardError(PlanTuranError, ValueError):
    """
    An input exceeds a size guard; the computation was refused rather than attempted
    """


class FormatError(PlanTuranError, ValueError):
    """
    Malformed graph6 or planar_code input
    """


class PatternFoundError(PlanTuranError):
    """
    The input was required to be S_{m,l}-free but contains the pattern
    """

    def __init__(self, witness: DoubleStarWitness) -> None:
        super().__init__(
            f"graph contains S_{{{len(witness.x_arms)},{len(witness.y_arms)}}} on edge "
            f"{witness.x}-{witness.y}"
        )
        self.witness = witness


class NotPlanarError(PlanTuranError):
    """
    The input was required to be planar but is not
    """

    def __init__(self, kuratowski: Any = None) -> None:
        super().__init__("graph is not planar")
        self.kuratowski = kuratowski


class BaseConstructionError(PlanTuranError, RuntimeError):
    """
    A vertex of degree at least 5 could not be placed in exactly one star-block
    """


class CertificateError(PlanTuranError, RuntimeError):
    """
    An internally produced certificate failed its own consistency check
    """


class ConstructionError(PlanTuranError, RuntimeError):
    """
    An extremal construction failed self-verification
    """


class RecipeRangeError(PlanTuranError, ValueError):
    """
    A construction recipe parameter is out of range
    """
