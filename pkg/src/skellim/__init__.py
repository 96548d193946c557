"""Finite simplicial sets, comma objects, weighted limits, and limits built by skeletal induction."""
from .category import FiniteCategory, cyclic_group
from .errors import (
    ArityExceeded,
    BoundExceeded,
    HypothesisViolation,
    MissingLimit,
    SchemaError,
    SimplicialError,
    SkellimError,
)
from .kernel import BACKEND
from .simplicial import SimplicialMap, SimplicialSet

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ArityExceeded",
    "BoundExceeded",
    "FiniteCategory",
    "HypothesisViolation",
    "MissingLimit",
    "SchemaError",
    "SimplicialError",
    "SimplicialMap",
    "SimplicialSet",
    "SkellimError",
    "cyclic_group",
]
