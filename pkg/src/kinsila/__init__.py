"""Exact-arithmetic validation and symplectic classification of
generalized kinematical Lie algebras."""

from .errors import (
    KinsilaError,
    JacobiError,
    NonAbelianRadicalError,
    RepError,
    SimplicityUndecided,
    DecompositionError,
    ValidationError,
    InternalFault,
    DocumentError,
)
from .liecore import LieAlgebra
from .kinematics import LABELS, classify, validate
from .documents import parse_document, parse_text

__version__ = "0.1.0"

__all__ = [
    "KinsilaError",
    "JacobiError",
    "NonAbelianRadicalError",
    "RepError",
    "SimplicityUndecided",
    "DecompositionError",
    "ValidationError",
    "InternalFault",
    "DocumentError",
    "LieAlgebra",
    "classify",
    "validate",
    "LABELS",
    "parse_document",
    "parse_text",
    "__version__",
]
