"""Exact branching multiplicities for products of unitary groups.

Kronecker, Littlewood-Richardson and plethysm coefficients are computed
directly, and limits of their stretched sequences are computed from graded
modules over the stabilizer of the stretching direction.
"""
from .partitions import Partition, conjugate, kostka, lr_coefficient, partitions
from .symchar import kronecker, mn_character, plethysm_schur
from .stability import (
    IntegerMatrix,
    detect_plateau,
    is_additive,
    kron_limit,
    kron_stretched_sequence,
    lr_limit,
    lr_stretched_sequence,
    plethysm_restriction_multiplicity,
    plethysm_stability_report,
    triple_from_matrix,
)

__all__ = [
    "IntegerMatrix",
    "Partition",
    "conjugate",
    "detect_plateau",
    "is_additive",
    "kostka",
    "kron_limit",
    "kron_stretched_sequence",
    "kronecker",
    "lr_coefficient",
    "lr_limit",
    "lr_stretched_sequence",
    "mn_character",
    "partitions",
    "plethysm_restriction_multiplicity",
    "plethysm_schur",
    "plethysm_stability_report",
    "triple_from_matrix",
]
__version__ = "0.1.0"
