"""The Rickard kernel T(k) from T*G(k, N) to T*G(N - k, N), in K-theory.

In the Grothendieck group the Rickard complex becomes the alternating sum of its terms,

    T(k) = sum_{l = max(0, -n)}^{k} c(l, n) F^(n + l) E^(l),    n = N - 2k,

with c(l, n) the coefficient of an :class:`~decat.braid.operators.ExponentRule`
evaluated at q = t.
"""

import logging

from decat.braid.operators import ExponentRule
from decat.ktheory.kernels import KernelMatrix, KTheoryModel

logger = logging.getLogger(__name__)


def rickard_terms(model: KTheoryModel, k: int, rule: ExponentRule) -> list:
    "The (coefficient, kernel) pairs of the sum, lowest l first."
    N = model.N
    n = N - 2 * k
    terms = []
    for l in range(max(0, -n), k + 1):
        coefficient = rule.coefficient(l, n).evaluate(model.variables.t)
        kernel = model.compose(model.f_kernel(n + l, k - l), model.e_kernel(l, k))
        terms.append((coefficient, kernel))
    return terms


def rickard_kernel(model: KTheoryModel, k: int, rule: ExponentRule) -> KernelMatrix:
    key = ("T", k, rule)
    return model.cached(
        key, lambda: model.combine(rickard_terms(model, k, rule), f"T({k})")
    )


def rickard_matrix(model: KTheoryModel, k: int, rule: ExponentRule, power: int = 1):
    """The matrix of T(k) (power 1) or of T(N - k)^-1 (power -1) on localized K-theory;
    both go from T*G(k, N) to T*G(N - k, N).

    Raises InternalConsistencyError if T(N - k) is singular."""
    if power == 1:
        return model.operator(rickard_kernel(model, k, rule))
    if power == -1:
        return model.cached(
            ("T^-1", k, rule),
            lambda: model.backend.inverse_matrix(
                model.operator(rickard_kernel(model, model.N - k, rule))
            ),
        )
    raise ValueError(f"power must be 1 or -1, got {power}.")
