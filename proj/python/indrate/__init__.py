"""Exact induced-rate computation and search for stabilizer channel transforms."""

from ._core import (
    EntropySummary,
    InducedJoint,
    PauliDist,
    ThresholdResult,
    __version__,
    canonical_code,
    code_dimensions,
    dist_from_total_p,
    evaluate_code,
    free_bit_count,
    hashing_bound,
    improvement_threshold,
    induced_joint,
    max_qubits,
    pattern_prob,
    skewed_dist,
    skewed_from_total_error,
    sweep_codes,
)

__all__ = [
    "EntropySummary",
    "InducedJoint",
    "PauliDist",
    "ThresholdResult",
    "__version__",
    "canonical_code",
    "code_dimensions",
    "dist_from_total_p",
    "evaluate_code",
    "free_bit_count",
    "hashing_bound",
    "improvement_threshold",
    "induced_joint",
    "max_qubits",
    "pattern_prob",
    "skewed_dist",
    "skewed_from_total_error",
    "sweep_codes",
]
