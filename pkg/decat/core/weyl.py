"""Root-system data for finite-type (ADE) graphs.

>>> from decat.core.cartan import GraphData, build_cartan
>>> a2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))
>>> is_finite_type(a2)
True
>>> positive_roots(a2)
[(1, 0), (0, 1), (1, 1)]
>>> weyl_dimension(a2, (1, 1)), height(a2, (1, 1))
(8, 4)
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from decat.core.cartan import CartanData, Weight, pair, reflect, symmetric_pairing
from decat.qlaurent.linalg import is_positive_definite

MAX_REFLECTIONS = 10_000


def is_finite_type(cd: CartanData) -> bool:
    "True if the Cartan matrix is positive definite, i.e. every component is ADE."
    return is_positive_definite(cd.cartan_matrix.tolist())


def _require_finite_type(cd: CartanData, what: str):
    if not is_finite_type(cd):
        raise ValueError(f"{what} is only available for finite-type graphs.")


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData) -> List[Tuple[int, ...]]:
    """Positive roots as coefficient vectors, ordered by height then discovery.

    In a simply-laced root system beta + alpha_i is a root exactly when
    <beta, alpha_i> = -1 (for beta a positive root other than alpha_i)."""
    _require_finite_type(cd, "positive_roots")
    roots = [cd.unit(i) for i in range(cd.rank)]
    seen = set(roots)
    frontier = list(roots)
    while frontier:
        next_frontier = []
        for beta in frontier:
            for i in range(cd.rank):
                if symmetric_pairing(cd, beta, cd.unit(i)) == -1:
                    gamma = tuple(b + int(k == i) for k, b in enumerate(beta))
                    if gamma not in seen:
                        seen.add(gamma)
                        next_frontier.append(gamma)
        roots.extend(next_frontier)
        frontier = next_frontier
    return roots


def lowest_weight(cd: CartanData, w: Sequence[int]) -> Weight:
    "The lowest weight w0(Lambda_w) of V(Lambda_w), found by reflecting downwards."
    weight = Weight.highest(w)
    for _ in range(MAX_REFLECTIONS):
        raising = next((i for i in range(cd.rank) if pair(cd, weight, i) > 0), None)
        if raising is None:
            return weight
        weight = reflect(cd, weight, raising)
    raise ValueError(
        f"No lowest weight reached after {MAX_REFLECTIONS} reflections; "
        "the graph is probably not of finite type."
    )


def height(cd: CartanData, w: Sequence[int]) -> int:
    "Height of Lambda_w minus the lowest weight: the depth of the full module."
    return lowest_weight(cd, w).height


def dominant_conjugate(cd: CartanData, weight: Weight) -> Weight:
    "The dominant weight in the Weyl orbit (finite type)."
    for _ in range(MAX_REFLECTIONS):
        lowering = next((i for i in range(cd.rank) if pair(cd, weight, i) < 0), None)
        if lowering is None:
            return weight
        weight = reflect(cd, weight, lowering)
    raise ValueError(f"No dominant conjugate of {weight} found; is the graph finite type?")


def weyl_dimension(cd: CartanData, w: Sequence[int]) -> int:
    "dim V(Lambda_w) = prod over positive roots of <Lambda_w + rho, beta> / <rho, beta>."
    _require_finite_type(cd, "The Weyl dimension formula")
    result = Fraction(1)
    for beta in positive_roots(cd):
        result *= Fraction(
            sum(b * (a + 1) for a, b in zip(w, beta)), sum(beta)
        )
    assert result.denominator == 1
    return int(result)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
