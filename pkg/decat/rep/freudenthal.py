"""Weight multiplicities of V(Lambda_w) by Freudenthal's recursion.

This is an independent oracle for the characters of the modules built by
:mod:`decat.rep.builder`; it shares no code with the construction beyond the Cartan
data. In (w, v) coordinates, with mu = Lambda_w - alpha_v, the recursion reads

    m(mu) = 2 sum_{beta > 0} sum_{k >= 1} m(mu + k beta) <mu + k beta, beta>
            / (2 <Lambda_w + rho, alpha_v> - <alpha_v, alpha_v>)

using <rho, alpha_i> = 1. Multiplicities are computed for dominant weights only and
extended to the rest of the support by Weyl symmetry.

>>> from decat.core.cartan import GraphData, build_cartan
>>> a2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))
>>> character = freudenthal_character(a2, (1, 1))
>>> character[Weight((1, 1), (1, 1))], sum(character.values())
(2, 8)
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Sequence

from decat.core.cartan import (
    CartanData,
    Weight,
    framing_pairing,
    pairings,
    symmetric_pairing,
)
from decat.core.weyl import dominant_conjugate, height, positive_roots
from decat.errors import InternalConsistencyError

logger = logging.getLogger(__name__)


def _is_dominant(cd: CartanData, weight: Weight) -> bool:
    return all(n >= 0 for n in pairings(cd, weight))


def _multiplicity(cd: CartanData, known: Dict[Weight, int], weight: Weight) -> int:
    if any(a < 0 for a in weight.v):
        return 0
    conjugate = dominant_conjugate(cd, weight)
    if any(a < 0 for a in conjugate.v):
        return 0
    return known.get(conjugate, 0)


def dominant_multiplicities(cd: CartanData, w: Sequence[int]) -> Dict[Weight, int]:
    "Multiplicities of the dominant weights of V(Lambda_w), in height order."
    w = tuple(w)
    roots = positive_roots(cd)
    top = Weight.highest(w)
    known = {top: 1}
    bound = height(cd, w)
    candidates = [
        Weight(w, v)
        for v in itertools.product(range(bound + 1), repeat=cd.rank)
        if 0 < sum(v) <= bound
    ]
    for weight in sorted(candidates, key=Weight.sort_key):
        if not _is_dominant(cd, weight):
            continue
        v = weight.v
        denominator = 2 * (framing_pairing(w, v) + sum(v)) - symmetric_pairing(cd, v, v)
        if denominator <= 0:
            raise InternalConsistencyError(
                f"Freudenthal denominator {denominator} at dominant weight {weight}."
            )
        numerator = 0
        for beta in roots:
            k = 1
            while True:
                higher = weight.shifted(tuple(-k * b for b in beta))
                if any(a < 0 for a in higher.v):
                    break
                m = _multiplicity(cd, known, higher)
                if m:
                    numerator += m * (
                        framing_pairing(w, beta) - symmetric_pairing(cd, higher.v, beta)
                    )
                k += 1
        value = Fraction(2 * numerator, denominator)
        if value.denominator != 1:
            raise InternalConsistencyError(
                f"Non-integral Freudenthal multiplicity {value} at {weight}."
            )
        if value:
            known[weight] = int(value)
    logger.debug("Dominant multiplicities of V(%s): %s", w, known)
    return known


def freudenthal_character(cd: CartanData, w: Sequence[int]) -> Dict[Weight, int]:
    """The full character of V(Lambda_w) (finite type), as a map weight -> multiplicity
    over the support, ordered by height and then by v."""
    w = tuple(w)
    known = dominant_multiplicities(cd, w)
    bound = height(cd, w)
    character = {}
    for v in itertools.product(range(bound + 1), repeat=cd.rank):
        if sum(v) > bound:
            continue
        weight = Weight(w, v)
        m = _multiplicity(cd, known, weight)
        if m:
            character[weight] = m
    return dict(sorted(character.items(), key=lambda item: item[0].sort_key()))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
