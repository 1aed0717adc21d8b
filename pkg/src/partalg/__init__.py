"""Exact arithmetic for partition algebras P_k(n) and their tensor representations."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    DimensionError,
    ParityError,
    PartalgError,
    ParseError,
)
from .setpart import SetPartition, coarsenings, enumerate_set_partitions, is_refinement, mobius
from .combinatorics import IntegerPartition, bell, restricted_bell, stirling2
from .algebra import AlgebraElement, multiply, to_orbit, to_diagram

__all__ = [
    "AlgebraElement",
    "BudgetExceeded",
    "DimensionError",
    "IntegerPartition",
    "ParityError",
    "PartalgError",
    "ParseError",
    "SetPartition",
    "bell",
    "coarsenings",
    "enumerate_set_partitions",
    "mobius",
    "multiply",
    "is_refinement",
    "restricted_bell",
    "stirling2",
    "to_diagram",
    "to_orbit",
]
