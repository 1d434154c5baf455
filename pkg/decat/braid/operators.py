"""Braid group operators on integrable modules.

The braid generator T_i acts on M(lambda), n = <lambda, alpha_i>, by the
decategorified Rickard complex

    T_i = sum_{l >= max(0, -n)} c(l) f_i^(n+l) e_i^(l) : M(lambda) -> M(s_i lambda)

where the coefficients c(l) come from an :class:`ExponentRule`. The sum is finite since
e_i^(l) vanishes on M(lambda) once lambda + l alpha_i leaves the support.

Operators are stored as :class:`WeightOperator`, one matrix block per source weight.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from decat.braid.words import BraidLetter, BraidWord
from decat.core.cartan import Vertex, Weight, pair, reflect
from decat.errors import (
    InternalConsistencyError,
    TruncatedModuleError,
    UnsupportedGeneratorError,
)
from decat.qlaurent import linalg
from decat.qlaurent.laurent import QLaurent
from decat.rep.module import IntegrableModule
from decat.udot.evaluate import Block

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExponentRule:
    """The coefficient c(l) = (-1)^l epsilon^l q^(a l + b l (n + l)) of the l-th term.

    >>> print(ExponentRule(1, 0, -1).coefficient(2, n=0))
    q^2
    >>> print(ExponentRule(0, 1, 1).coefficient(1, n=-1))
    -1
    """

    a: int
    b: int
    epsilon: int = 1

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be 1 or -1, got {self.epsilon}.")

    def exponent(self, l: int, n: int) -> int:
        return self.a * l + self.b * l * (n + l)

    def coefficient(self, l: int, n: int) -> QLaurent:
        sign = (-self.epsilon) ** l
        return QLaurent.monomial(self.exponent(l, n), sign)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "epsilon": self.epsilon,
            "coefficient": f"(-1)^l ({self.epsilon})^l q^({self.a} l + {self.b} l (n + l))",
        }

    def __str__(self) -> str:
        return f"a={self.a},b={self.b},epsilon={self.epsilon:+d}"


class WeightOperator:
    """A weight-homogeneous linear map on a module: every source weight maps into a
    single target weight."""

    def __init__(self, blocks: Dict[Weight, Block]):
        self.blocks = dict(blocks)

    @classmethod
    def identity(cls, module: IntegrableModule) -> "WeightOperator":
        return cls(
            {weight: Block(weight, linalg.identity(module.dim(weight))) for weight in module.weights}
        )

    @property
    def sources(self):
        return sorted(self.blocks, key=Weight.sort_key)

    def target(self, source: Weight) -> Weight:
        return self.blocks[source].target

    def compose(self, other: "WeightOperator") -> "WeightOperator":
        "self o other: ``other`` acts first."
        blocks = {}
        for source, (middle, first) in other.blocks.items():
            if middle not in self.blocks:
                raise ValueError(f"{middle} is not a source weight of the left operator.")
            target, second = self.blocks[middle]
            blocks[source] = Block(target, linalg.matmul(second, first))
        return WeightOperator(blocks)

    def inverse(self) -> "WeightOperator":
        "Exact block-wise inverse; a singular block raises InternalConsistencyError."
        blocks = {}
        for source, (target, matrix) in self.blocks.items():
            if matrix.shape[0] != matrix.shape[1]:
                raise InternalConsistencyError(
                    f"The block {source} -> {target} of shape {matrix.shape} is not square."
                )
            blocks[target] = Block(source, linalg.inverse(matrix))
        return WeightOperator(blocks)

    def scaled(self, scalar) -> "WeightOperator":
        return WeightOperator(
            {source: Block(target, linalg.scale(m, scalar)) for source, (target, m) in self.blocks.items()}
        )

    def difference(self, other: "WeightOperator") -> Dict[Weight, np.ndarray]:
        """The blocks of self - other. Raises ValueError if the operators disagree about
        sources or targets."""
        if set(self.blocks) != set(other.blocks):
            raise ValueError("The operators are defined on different weights.")
        result = {}
        for source, (target, matrix) in self.blocks.items():
            other_target, other_matrix = other.blocks[source]
            if other_target != target:
                raise ValueError(
                    f"On {source} the operators map to {target} and {other_target}."
                )
            result[source] = linalg.subtract(matrix, other_matrix)
        return result

    def equals(self, other: "WeightOperator") -> bool:
        try:
            difference = self.difference(other)
        except ValueError:
            return False
        return all(linalg.is_zero(m) for m in difference.values())

    def is_identity(self) -> bool:
        return all(
            target == source and linalg.equal(m, linalg.identity(m.shape[1]))
            for source, (target, m) in self.blocks.items()
        )

    def to_json(self) -> dict:
        return {
            str(source): {
                "target": str(self.blocks[source].target),
                "matrix": linalg.to_text(self.blocks[source].matrix),
            }
            for source in self.sources
        }


def rickard_block(module: IntegrableModule, k: int, weight: Weight, rule: ExponentRule) -> Block:
    n = pair(module.cartan, weight, k)
    target = reflect(module.cartan, weight, k)
    matrix = linalg.zeros(module.dim(target), module.dim(weight))
    l = max(0, -n)
    while module.dim(weight.plus_root(k, l)):
        raised = weight.plus_root(k, l)
        e_part = module.divided_power_matrix(k, l, weight, "E")
        f_part = module.divided_power_matrix(k, n + l, raised, "F")
        term = linalg.scale(linalg.matmul(f_part, e_part), rule.coefficient(l, n))
        matrix = linalg.add(matrix, term)
        l += 1
    return Block(target, matrix)


def rickard_operator(module: IntegrableModule, i: Vertex, rule: ExponentRule) -> WeightOperator:
    """The operator of T_i on a complete module.

    >>> from decat.core.cartan import GraphData, build_cartan
    >>> from decat.rep.builder import build_module
    >>> sl2 = build_cartan(GraphData(("1",)))
    >>> module = build_module(sl2, (1,))
    >>> operator = rickard_operator(module, "1", ExponentRule(1, 0, -1))
    >>> top, bottom = module.weights
    >>> print(operator.blocks[top].target, operator.blocks[top].matrix[0, 0])
    w=1;v=1 1
    >>> print(operator.blocks[bottom].target, operator.blocks[bottom].matrix[0, 0])
    w=1;v=0 -q
    """
    if module.truncated:
        raise TruncatedModuleError(
            f"T_i needs a complete module; V({module.highest_weight}) is truncated at depth "
            f"{module.depth_limit}."
        )
    k = module.cartan.index(i)
    return WeightOperator({weight: rickard_block(module, k, weight, rule) for weight in module.weights})


class OperatorCache:
    "Generator operators (and their inverses) of one module under one exponent rule."

    def __init__(self, module: IntegrableModule, rule: ExponentRule):
        self.module = module
        self.rule = rule
        self._operators: Dict[tuple, WeightOperator] = {}

    def letter(self, letter: BraidLetter) -> WeightOperator:
        if letter.is_theta:
            raise UnsupportedGeneratorError(
                f"{letter} has no action on a module built from the quantum group; Theta "
                "letters need the geometric model (braid eval --geometric)."
            )
        k = self.module.cartan.index(letter.vertex)
        key = (k, letter.exponent)
        if key not in self._operators:
            if letter.exponent == 1:
                self._operators[key] = rickard_operator(self.module, k, self.rule)
            else:
                self._operators[key] = self.letter(letter.inverse()).inverse()
        return self._operators[key]

    def word(self, word: BraidWord) -> WeightOperator:
        result = WeightOperator.identity(self.module)
        for letter in word.letters:
            result = result.compose(self.letter(letter))
        return result


def evaluate_word(
    word: BraidWord,
    module: IntegrableModule,
    rule: ExponentRule,
    cache: Optional[OperatorCache] = None,
) -> WeightOperator:
    """The operator of a braid word, composed with the rightmost letter acting first.

    The empty word gives the identity. Theta letters raise UnsupportedGeneratorError."""
    word.validate(module.cartan)
    if cache is None:
        cache = OperatorCache(module, rule)
    elif cache.module is not module or cache.rule != rule:
        raise ValueError("The operator cache belongs to another module or rule.")
    return cache.word(word)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
