"""Finite simplicial sets and their basic constructions."""
from .sset import SimplicialMap, SimplicialSet, Tables
from .constructions import (
    boundary,
    boundary_inclusion,
    coproduct,
    horn,
    horn_inclusion,
    product,
    pushout,
    seq_composite,
    skeleton,
    std_simplex,
)

__all__ = [
    "SimplicialMap",
    "SimplicialSet",
    "Tables",
    "boundary",
    "boundary_inclusion",
    "coproduct",
    "horn",
    "horn_inclusion",
    "product",
    "pushout",
    "seq_composite",
    "skeleton",
    "std_simplex",
]
