"""Januarials: two-face maps of triangle-group actions over PSL(2, p)."""
from .action import (
    ActionSpace, CosetMap, MapClass, TriangleAction, associate, build_explicit_action,
    build_pairs_action, build_projective_action, classify, coset_map,
)
from .exceptions import InvalidInputError, InvariantViolation, JanuarialError
from .mobius import INFINITY, MobiusTransformation, PrimeField, compose, theta
from .report import JanuarialReport, build_report
from .surface import CompanionGraph, SurfaceType, analyze_surface, companion
from .theory import (
    AdmissibilityVerdict, StandardTriple, admissible_prime, count_3januarials,
    find_triple, search, standard_triple,
)

__all__ = [
    "ActionSpace", "AdmissibilityVerdict", "CompanionGraph", "CosetMap", "INFINITY",
    "InvalidInputError", "InvariantViolation", "JanuarialError", "JanuarialReport",
    "MapClass", "MobiusTransformation", "PrimeField", "StandardTriple", "SurfaceType",
    "TriangleAction", "admissible_prime", "analyze_surface", "associate",
    "build_explicit_action", "build_pairs_action", "build_projective_action",
    "build_report", "classify", "companion", "compose", "coset_map",
    "count_3januarials", "find_triple", "search", "standard_triple", "theta",
]
