"""Geometric entanglement of N-qubit W states."""

from ._core import (
    Branch,
    DiameterSolution,
    Error,
    OverlapReport,
    Region,
    RegionReport,
    WState,
    analyze,
    classify,
    figure_sweep,
    first_critical,
    g2_asymmetric_closed,
    g2_interpolating,
    g2_symmetric_limit,
    g_three_qubit,
    maximize_overlap,
    nearest_product,
    overlap,
    r1_large_n_estimate,
    r_asymmetric_closed,
    r_two_param,
    second_critical,
    solve,
)

__all__ = [
    "Branch",
    "DiameterSolution",
    "Error",
    "OverlapReport",
    "Region",
    "RegionReport",
    "WState",
    "analyze",
    "classify",
    "figure_sweep",
    "first_critical",
    "g2_asymmetric_closed",
    "g2_interpolating",
    "g2_symmetric_limit",
    "g_three_qubit",
    "maximize_overlap",
    "nearest_product",
    "overlap",
    "r1_large_n_estimate",
    "r_asymmetric_closed",
    "r_two_param",
    "second_critical",
    "solve",
]
