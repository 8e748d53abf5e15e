"""Bi-connected partitioning with a size constraint."""

from ._mbcp import (
    GenerationError,
    Instance,
    OracleSizeError,
    articulation_points,
    brute_force_optimum,
    generate_instance,
    generate_solution,
    is_biconnected,
    local_search,
    reduce_mpgsd_star,
    run_bench,
    verify,
)

__all__ = [
    "GenerationError",
    "Instance",
    "OracleSizeError",
    "articulation_points",
    "brute_force_optimum",
    "generate_instance",
    "generate_solution",
    "is_biconnected",
    "local_search",
    "reduce_mpgsd_star",
    "run_bench",
    "verify",
]
