"""Exact discrete moment tensors, Ehrhart tensor polynomials and related checks.

Polytopes are given as lists of integer vertices. Rational values are
returned as fractions.Fraction and tensors as dicts mapping the multi-index
tuple to its coordinate (zero coordinates are omitted).
"""

from ._ehrtensor import (
    bernoulli,
    check_equivariance,
    check_reciprocity,
    check_translation_covariance,
    count,
    discrete_moment,
    ehrhart_tensors,
    faulhaber_sum,
    lattice_points,
    moment_tensor,
    planar_kernel,
    planar_rank,
    prism_rank,
    run_cli,
    valuation_n,
)

__all__ = [
    "bernoulli",
    "check_equivariance",
    "check_reciprocity",
    "check_translation_covariance",
    "count",
    "discrete_moment",
    "ehrhart_tensors",
    "faulhaber_sum",
    "lattice_points",
    "moment_tensor",
    "planar_kernel",
    "planar_rank",
    "prism_rank",
    "run_cli",
    "valuation_n",
]
