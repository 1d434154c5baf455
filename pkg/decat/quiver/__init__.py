"""Numerical invariants of Nakajima quiver varieties M(lambda) and of the Hecke
correspondences between them.

Nothing in this subpackage constructs a variety. Dimensions, canonical weights,
adjunction shifts and the grading data of the kernels E^(r)_i(lambda), F^(r)_i(lambda)
are all closed-form expressions in the (w, v) coordinates of lambda, and are used to
cross-check the K-theoretic and algebraic models elsewhere in decat.
"""

from decat.quiver.geometry import (
    LEFT,
    RIGHT,
    DimensionRow,
    HeckeDimension,
    adjunction_shift,
    canonical_weight,
    dimension_table,
    hecke_dim,
    is_empty,
    nakajima_conjugation_scalar,
    quiver_dim,
)
from decat.quiver.kernel_spec import (
    CanonicalBundle,
    GrassmannianKernelSpec,
    KernelSpec,
    LineBundleWord,
    grassmannian_spec,
    hecke_canonical_shift,
    kernel_spec,
)

__all__ = [
    "LEFT",
    "RIGHT",
    "DimensionRow",
    "HeckeDimension",
    "adjunction_shift",
    "canonical_weight",
    "dimension_table",
    "hecke_dim",
    "is_empty",
    "nakajima_conjugation_scalar",
    "quiver_dim",
    "CanonicalBundle",
    "GrassmannianKernelSpec",
    "KernelSpec",
    "LineBundleWord",
    "grassmannian_spec",
    "hecke_canonical_shift",
    "kernel_spec",
]
