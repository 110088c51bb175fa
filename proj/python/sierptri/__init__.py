"""Sierpinski graphs, Sierpinski triangle graphs, and their distance metrics."""

from ._core import (
    ENUM_CAP,
    MAX_ORDER,
    TRI_CAP,
    TriangleGraph,
    claim_ids,
    delta_pair,
    delta_total,
    lift,
    metrics,
    project,
    s_distance,
    s_d_prime,
    s_extreme_distance,
    s_is_extreme,
    s_median,
    s_neighbors,
    s_partner,
    s_sum_extreme_distances,
    s_total_distance,
    s_vertices,
    st_distance_formula,
    verify,
)

__all__ = [
    "ENUM_CAP",
    "MAX_ORDER",
    "TRI_CAP",
    "TriangleGraph",
    "claim_ids",
    "delta_pair",
    "delta_total",
    "lift",
    "metrics",
    "project",
    "s_distance",
    "s_d_prime",
    "s_extreme_distance",
    "s_is_extreme",
    "s_median",
    "s_neighbors",
    "s_partner",
    "s_sum_extreme_distances",
    "s_total_distance",
    "s_vertices",
    "st_distance_formula",
    "verify",
]
