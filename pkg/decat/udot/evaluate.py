"""Evaluation of U-dot terms on integrable modules.

The value of a term (or of a sum of terms) on a module M is a map of weight blocks:
for every weight mu in the support of M, the matrix of the term restricted to M(mu),
together with the weight it maps into. Letters act right to left, E(i, r) and F(i, r)
by the divided-power matrices stored in the module.
"""

import logging
from typing import Dict, Iterable, NamedTuple, Optional, Union

import numpy as np

from decat.core.cartan import CartanData, Weight
from decat.qlaurent import linalg
from decat.rep.module import IntegrableModule
from decat.udot.terms import Idempotent, UdotTerm, normalize_idempotents

logger = logging.getLogger(__name__)


class Block(NamedTuple):
    target: Weight
    matrix: np.ndarray


Terms = Union[UdotTerm, Iterable[UdotTerm]]


def _as_terms(terms: Terms):
    return [terms] if isinstance(terms, UdotTerm) else list(terms)


def _check_cartan(terms, module: IntegrableModule, cartan: Optional[CartanData]):
    """Terms carry no Cartan data of their own, so their vertices and idempotent ranks are
    checked against the module's; ``cartan``, when given, must be the module's."""
    cd = module.cartan
    if cartan is not None and cartan != cd:
        raise ValueError("The term and the module are built over different Cartan data.")
    for term in terms:
        for letter in term.word:
            if isinstance(letter, Idempotent):
                if len(letter.weight.w) != cd.rank:
                    raise ValueError(f"Idempotent {letter} does not match a graph of rank {cd.rank}.")
            else:
                cd.index(letter.vertex)


def _evaluate_term(term: UdotTerm, module: IntegrableModule, weight: Weight) -> Block:
    cd = module.cartan
    normalized = normalize_idempotents(term, cd)
    generators = term.generators
    target = weight
    for letter in reversed(generators):
        target = target.shifted(letter.root_shift(cd))
    if normalized is None or (
        normalized.source is not None and normalized.source != weight
    ):
        return Block(target, linalg.zeros(module.dim(target), module.dim(weight)))
    matrix = linalg.identity(module.dim(weight))
    current = weight
    for letter in reversed(generators):
        step = module.divided_power_matrix(letter.vertex, letter.power, current, letter.direction)
        matrix = linalg.matmul(step, matrix)
        current = current.shifted(letter.root_shift(cd))
    if term.scalar != 1:
        matrix = linalg.scale(matrix, term.scalar)
    return Block(target, matrix)


def evaluate_block(
    terms: Terms, module: IntegrableModule, weight: Weight, cartan: Optional[CartanData] = None
) -> Block:
    """The matrix of a term, or of the sum of several terms, on M(weight).

    All terms must map M(weight) into the same weight space."""
    terms = _as_terms(terms)
    _check_cartan(terms, module, cartan)
    total = None
    for term in terms:
        block = _evaluate_term(term, module, weight)
        if total is None:
            total = block
        elif block.target != total.target:
            raise ValueError(
                f"The terms are not weight-homogeneous on M({weight}): they map to "
                f"{total.target} and {block.target}."
            )
        else:
            total = Block(total.target, linalg.add(total.matrix, block.matrix))
    if total is None:
        return Block(weight, linalg.zeros(module.dim(weight), module.dim(weight)))
    return total


def evaluate(
    terms: Terms, module: IntegrableModule, cartan: Optional[CartanData] = None
) -> Dict[Weight, Block]:
    """Evaluate a term (or a sum of terms) on every weight space of the module.

    >>> from decat.core.cartan import GraphData, build_cartan
    >>> from decat.rep.builder import build_module
    >>> from decat.udot.terms import a, e, f
    >>> sl2 = build_cartan(GraphData(("1",)))
    >>> module = build_module(sl2, (1,))
    >>> top = module.highest_weight
    >>> commutator = [UdotTerm.of(f(1), e(1), a(top)), UdotTerm.of(e(1), f(1), a(top), scalar=-1)]
    >>> print(evaluate(commutator, module)[top].matrix[0, 0])
    1
    """
    terms = _as_terms(terms)
    _check_cartan(terms, module, cartan)
    return {weight: evaluate_block(terms, module, weight) for weight in module.weights}


def descent(term: UdotTerm, cd: CartanData) -> int:
    """How far below its source weight the evaluation of the term reaches.

    A term can be evaluated on M(lambda) of a truncated module when
    height(lambda) + descent <= depth limit."""
    deepest = 0
    depth = 0
    for letter in reversed(term.generators):
        depth += sum(letter.root_shift(cd))
        deepest = max(deepest, depth)
    return deepest


if __name__ == "__main__":
    import doctest

    doctest.testmod()
