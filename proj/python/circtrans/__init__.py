"""Transposition distance on circular binary strings."""

from ._circtrans import (
    ConstructionError,
    Error,
    IncompatiblePairError,
    InvalidInputError,
    analyze,
    apply,
    canonicalize,
    census,
    diameter_predicate,
    dominance_orientation,
    dominance_solve,
    exact_distance,
    exact_path,
    f1,
    f2,
    generate,
    greedy_upper_bound,
    lower_bound,
    neighbors,
    partition,
    verify,
)

__all__ = [
    "ConstructionError",
    "Error",
    "IncompatiblePairError",
    "InvalidInputError",
    "analyze",
    "apply",
    "canonicalize",
    "census",
    "diameter_predicate",
    "dominance_orientation",
    "dominance_solve",
    "exact_distance",
    "exact_path",
    "f1",
    "f2",
    "generate",
    "greedy_upper_bound",
    "lower_bound",
    "neighbors",
    "partition",
    "verify",
]
