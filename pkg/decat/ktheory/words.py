"""Braid words acting on the localized K-theory of T*G(k, N).

The geometric sl2 action has a single vertex, "1". T1 sends T*G(k, N) to T*G(N - k, N)
by the Rickard kernel, T1^-1 by the inverse of T(N - k), and Th1^(+-1) tensors by
det(V)^(+-1). The rightmost letter acts first, as for module operators.
"""

import logging
from dataclasses import dataclass
from typing import Any, List

from decat.braid.operators import ExponentRule
from decat.braid.words import BraidWord
from decat.core.cartan import GraphData, build_cartan
from decat.ktheory.kernels import KTheoryModel, Matrix, multiply
from decat.ktheory.rickard import rickard_matrix

logger = logging.getLogger(__name__)

SL2 = build_cartan(GraphData(("1",), ()))


@dataclass
class GeometricOperator:
    "A map from the localized K-theory of T*G(source_k, N) to that of T*G(target_k, N)."

    source_k: int
    target_k: int
    matrix: Matrix


def letter_matrix(model: KTheoryModel, letter, k: int, rule: ExponentRule) -> GeometricOperator:
    if letter.is_theta:
        kernel = model.theta(k, letter.exponent)
        return GeometricOperator(k, k, model.operator(kernel))
    return GeometricOperator(k, model.N - k, rickard_matrix(model, k, rule, letter.exponent))


def evaluate_geometric_word(
    word: BraidWord, model: KTheoryModel, k: int, rule: ExponentRule
) -> GeometricOperator:
    """The operator of ``word`` on T*G(k, N).

    Raises UnknownVertexError for a vertex other than "1"."""
    word.validate(SL2)
    current = k
    if not 0 <= k <= model.N:
        raise ValueError(f"T*G(k, N) needs 0 <= k <= N, got k={k}, N={model.N}.")
    matrix: Any = None
    for letter in reversed(word.letters):
        step = letter_matrix(model, letter, current, rule)
        matrix = step.matrix if matrix is None else multiply(matrix, step.matrix)
        current = step.target_k
    if matrix is None:
        matrix = model.operator(model.identity(k))
    logger.debug("Evaluated %s on T*G(%d, %d).", word, k, model.N)
    return GeometricOperator(k, current, matrix)


def render(model: KTheoryModel, operator: GeometricOperator) -> List[List[str]]:
    return [[model.backend.render(value) for value in row] for row in operator.matrix]
