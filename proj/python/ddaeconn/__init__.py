"""Structural connections of delay differential-algebraic systems.

Parse a system with :class:`System`, inspect its matching and exposed
equations, and enumerate the connections of an exposed equation. The
arborescence helpers work on plain node and arc lists.
"""

from ._ddaeconn import (
    CapExceeded,
    Error,
    InputError,
    LimitExceeded,
    System,
    brute_force_arborescences,
    count_arborescences,
    enumerate_arborescences,
    run_bench,
)

__all__ = [
    "CapExceeded",
    "Error",
    "InputError",
    "LimitExceeded",
    "System",
    "brute_force_arborescences",
    "count_arborescences",
    "enumerate_arborescences",
    "run_bench",
]
