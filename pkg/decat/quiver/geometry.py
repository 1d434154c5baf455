"""Closed-form numerical invariants of quiver varieties and Hecke correspondences.

For lambda = Lambda_w - alpha_v the quiver variety M(lambda) has dimension

    dim M(lambda) = 2 <alpha_v, Lambda_w> - <alpha_v, alpha_v>,

its canonical bundle is trivial up to the equivariant weight -dim, and the Hecke
correspondence B^(r)_i(lambda) between M(lambda) and M(lambda + r alpha_i) is
Lagrangian, so its dimension is half the sum of the two dimensions.

A negative dimension (or a negative entry of v) marks the variety as empty. This is a
heuristic marker only; no finer emptiness criterion is attempted.

>>> from decat.core.cartan import GraphData, Weight, build_cartan
>>> sl2 = build_cartan(GraphData(("1",)))
>>> [quiver_dim(sl2, Weight((4,), (k,))) for k in range(5)]
[0, 6, 8, 6, 0]
>>> adjunction_shift(sl2, Weight((2,), (1,)), "1", 1)
(1, -1)
"""

import itertools
import logging
from typing import List, NamedTuple, Sequence, Tuple

from decat.core.cartan import (
    CartanData,
    Vertex,
    Weight,
    framing_pairing,
    pair,
    pairings,
    symmetric_pairing,
)
from decat.errors import InternalConsistencyError

logger = logging.getLogger(__name__)

RIGHT = "right"
LEFT = "left"


def quiver_dim(cd: CartanData, weight: Weight) -> int:
    "dim M(lambda) = 2 <alpha_v, Lambda_w> - <alpha_v, alpha_v>."
    return 2 * framing_pairing(weight.w, weight.v) - symmetric_pairing(
        cd, weight.v, weight.v
    )


def canonical_weight(cd: CartanData, weight: Weight) -> int:
    "Equivariant weight of the canonical bundle of M(lambda), which is -dim M(lambda)."
    return -quiver_dim(cd, weight)


def is_empty(cd: CartanData, weight: Weight) -> bool:
    "Heuristic emptiness marker: a negative root coordinate or a negative dimension."
    return any(a < 0 for a in weight.v) or quiver_dim(cd, weight) < 0


def adjunction_shift(
    cd: CartanData, weight: Weight, i: Vertex, r: int, side: str = RIGHT
) -> Tuple[int, int]:
    """(homological, equivariant) shift relating the adjoints of E^(r)_i(lambda) to
    F^(r)_i(lambda).

    The right adjoint of E is F[r(n+r)]{-r(n+r)} with n = <lambda, alpha_i>; the left
    adjoint has both signs flipped."""
    if r < 1:
        raise ValueError(f"The power r must be positive, got {r}.")
    if side not in (RIGHT, LEFT):
        raise ValueError(f"side must be '{RIGHT}' or '{LEFT}', got {side!r}.")
    amount = r * (pair(cd, weight, i) + r)
    return (amount, -amount) if side == RIGHT else (-amount, amount)


def _lambda_norm(cd: CartanData, weight: Weight, framing_norm: int) -> int:
    "<lambda, lambda> given the unknown <Lambda_w, Lambda_w> as framing_norm."
    return (
        framing_norm
        - 2 * framing_pairing(weight.w, weight.v)
        + symmetric_pairing(cd, weight.v, weight.v)
    )


def nakajima_conjugation_scalar(cd: CartanData, weight: Weight, i: Vertex) -> int:
    """The shift s by which Nakajima's conjugation differs from the identity.

    s is given by a difference of floor expressions in <lambda, lambda> and
    <lambda - alpha_i, lambda - alpha_i>, which involve the undetermined constant
    <Lambda_w, Lambda_w>. We evaluate the expression for both parities of that constant,
    check that it cancels, and compare with the closed form -<lambda, alpha_i> - 1.
    """
    k = cd.index(i)
    lowered = weight.shifted(cd.unit(k))
    values = set()
    for framing_norm in (0, 1):
        s = (
            -(_lambda_norm(cd, weight, framing_norm) // 2)
            + 2 * sum(weight.v)
            + _lambda_norm(cd, lowered, framing_norm) // 2
            - 2 * sum(lowered.v)
        )
        values.add(s)
    closed_form = -pair(cd, weight, k) - 1
    if values != {closed_form}:
        raise InternalConsistencyError(
            f"Conjugation scalar at {weight}, vertex {cd.vertices[k]}: floor expressions "
            f"give {sorted(values)}, closed form gives {closed_form}."
        )
    return closed_form


class HeckeDimension(NamedTuple):
    dim: int
    empty: bool


def hecke_dim(cd: CartanData, weight: Weight, i: Vertex, r: int) -> HeckeDimension:
    "dim B^(r)_i(lambda) = (dim M(lambda) + dim M(lambda + r alpha_i)) / 2."
    if r < 1:
        raise ValueError(f"The power r must be positive, got {r}.")
    raised = weight.plus_root(cd.index(i), r)
    total = quiver_dim(cd, weight) + quiver_dim(cd, raised)
    if total % 2:
        raise ValueError(
            f"Odd dimension sum {total} for the Hecke correspondence at {weight}; "
            "the input data is inconsistent."
        )
    empty = is_empty(cd, weight) or is_empty(cd, raised)
    if empty:
        logger.debug("Hecke correspondence at %s (r=%d) is empty.", weight, r)
    return HeckeDimension(total // 2, empty)


class DimensionRow(NamedTuple):
    weight: Weight
    pairings: Tuple[int, ...]
    dim: int
    canonical_weight: int
    empty: bool


def dimension_table(cd: CartanData, w: Sequence[int], height_bound: int) -> List[DimensionRow]:
    "One row per v >= 0 with sum(v) <= height_bound, ordered by height then v."
    if height_bound < 0:
        raise ValueError(f"The height bound must be nonnegative, got {height_bound}.")
    rows = []
    for v in itertools.product(range(height_bound + 1), repeat=cd.rank):
        if sum(v) > height_bound:
            continue
        weight = Weight(tuple(w), v)
        rows.append(
            DimensionRow(
                weight,
                pairings(cd, weight),
                quiver_dim(cd, weight),
                canonical_weight(cd, weight),
                is_empty(cd, weight),
            )
        )
    return sorted(rows, key=lambda row: row.weight.sort_key())
