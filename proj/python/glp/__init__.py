"""Generalized Legendre polynomial bases, image moments and su(1,1) checks."""

from ._core import (
    ArgumentError,
    DomainError,
    FormatError,
    IoError,
    RangeError,
    analyze_image,
    casimir_defect,
    continuity_check,
    gauss_legendre,
    glp_table,
    glp_value,
    gram_deviation,
    j3,
    jminus,
    jplus,
    legendre_p,
    project,
    quality,
    reconstruct,
    seminorm,
    synthesize,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "DomainError",
    "FormatError",
    "IoError",
    "RangeError",
    "analyze_image",
    "casimir_defect",
    "continuity_check",
    "gauss_legendre",
    "glp_table",
    "glp_value",
    "gram_deviation",
    "j3",
    "jminus",
    "jplus",
    "legendre_p",
    "project",
    "quality",
    "reconstruct",
    "seminorm",
    "synthesize",
    "verify",
]
