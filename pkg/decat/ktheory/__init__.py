"""Torus-equivariant K-theory of T*G(k, N) by localization, and the sl2 kernels on it.

:class:`~decat.ktheory.kernels.KTheoryModel` builds the kernels E^(r), F^(r) and Theta
as matrices of fixed-point restrictions; :mod:`decat.ktheory.rickard` sums them into
the braid kernel T(k), and :func:`~decat.ktheory.suite.verify_ktheory` checks the
identities between them. Rational functions are handled by :mod:`decat.fieldmath`.
"""

from decat.ktheory.checks import CHECKS, check_names
from decat.ktheory.conventions import KTheoryConventions, calibrated_conventions
from decat.ktheory.grassmannian import (
    TangentConvention,
    fixed_point_label,
    fixed_points,
    tangent_weights,
)
from decat.ktheory.kernels import KernelMatrix, KTheoryModel
from decat.ktheory.rickard import rickard_kernel, rickard_matrix
from decat.ktheory.suite import verify_ktheory
from decat.ktheory.words import GeometricOperator, evaluate_geometric_word

__all__ = [
    "CHECKS",
    "check_names",
    "KTheoryConventions",
    "calibrated_conventions",
    "TangentConvention",
    "fixed_point_label",
    "fixed_points",
    "tangent_weights",
    "KernelMatrix",
    "KTheoryModel",
    "rickard_kernel",
    "rickard_matrix",
    "verify_ktheory",
    "GeometricOperator",
    "evaluate_geometric_word",
]
