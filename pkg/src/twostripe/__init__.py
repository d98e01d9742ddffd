"""Exact solver for the symmetric two-stripe circulant TSP."""
from .instance import (
    CylinderCoord,
    Decomposition,
    InvalidInstanceError,
    Triviality,
    TwoStripeInstance,
    build_instance,
    classify,
    coord_of,
    decompose,
    label_of,
    row_of_minus_a2,
)
from .solver import SolveResult, compute_m_star, decide, solve, solve_via_gg_formula
from .materialize import emit_tour, iter_tour, validate_tour

__all__ = [
    "CylinderCoord",
    "Decomposition",
    "InvalidInstanceError",
    "SolveResult",
    "Triviality",
    "TwoStripeInstance",
    "build_instance",
    "classify",
    "compute_m_star",
    "coord_of",
    "decide",
    "decompose",
    "emit_tour",
    "iter_tour",
    "label_of",
    "row_of_minus_a2",
    "solve",
    "solve_via_gg_formula",
    "validate_tour",
]
