"""Torus-fixed points and tangent characters of T*G(k, N).

The torus (C*)^N x C* acts on T*G(k, N) with isolated fixed points, the coordinate
subspaces V_S spanned by e_i for i in S, |S| = k. Subsets are 0-based tuples
internally and are printed 1-based:

>>> fixed_points(3, 2)
[(0, 1), (0, 2), (1, 2)]
>>> fixed_point_label((0, 2))
'{1,3}'

The tangent space at V_S splits into the base Hom(V, C^N/V), with characters
x_j / x_i, and the fibre, with characters x_i / x_j t^f (i in S, j not in S):

>>> [str(w) for w in tangent_weights(2, 1, (0,))]
['x2/x1', 'x1/x2 t^2']

The fibre exponent f and the value of the equivariant shift {1} are conventions, see
:class:`TangentConvention`.
"""

import itertools
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from decat.fieldmath import Variables

FixedPoint = Tuple[int, ...]


def fixed_points(N: int, k: int) -> List[FixedPoint]:
    "The fixed points of T*G(k, N), in lexicographic order."
    if not 0 <= k <= N:
        raise ValueError(f"T*G(k, N) needs 0 <= k <= N, got k={k}, N={N}.")
    return list(itertools.combinations(range(N), k))


def fixed_point_label(S: Sequence[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in S) + "}"


def complement(N: int, S: Sequence[int]) -> FixedPoint:
    return tuple(i for i in range(N) if i not in S)


@dataclass(frozen=True)
class Character:
    """The torus character x^a t^e."""

    x: Tuple[int, ...]
    t: int = 0

    @classmethod
    def ratio(cls, N: int, numerator: int, denominator: int, t: int = 0) -> "Character":
        "x_numerator / x_denominator t^t."
        return cls(tuple(int(j == numerator) - int(j == denominator) for j in range(N)), t)

    def value(self, variables: Variables):
        return variables.monomial(self.x, self.t)

    def __str__(self) -> str:
        up = [f"x{j + 1}" + (f"^{a}" if a != 1 else "") for j, a in enumerate(self.x) if a > 0]
        down = [f"x{j + 1}" + (f"^{-a}" if a != -1 else "") for j, a in enumerate(self.x) if a < 0]
        text = "*".join(up) or "1"
        if down:
            text += "/" + "*".join(down)
        if self.t:
            text += f" t^{self.t}"
        return text


@dataclass(frozen=True)
class TangentConvention:
    """The fibre exponent f (characters x_i / x_j t^f on the cotangent fibres) and the
    value s = sign * t^power of the equivariant shift {1}."""

    fibre: int = 2
    shift_sign: int = -1
    shift_power: int = 1

    def shift(self, variables: Variables, m: int = 1):
        "The value of the shift {m}, i.e. s^m."
        sign = self.shift_sign ** abs(m)
        return variables.backend.constant(sign) * variables.t ** (self.shift_power * m)

    @property
    def shift_label(self) -> str:
        sign = "-" if self.shift_sign < 0 else ""
        power = "t" if self.shift_power == 1 else f"t^{self.shift_power}"
        return f"{sign}{power}"

    def to_json(self) -> dict:
        return {"fibre_t_exponent": self.fibre, "shift": self.shift_label}

    def __str__(self) -> str:
        return f"fibre t^{self.fibre}, {{1}} -> {self.shift_label}"


def tangent_weights(N: int, k: int, S: Sequence[int], fibre: int = 2) -> List[Character]:
    "The 2k(N-k) characters of the tangent space of T*G(k, N) at V_S."
    S = tuple(S)
    if len(S) != k or len(set(S)) != k or any(not 0 <= i < N for i in S):
        raise ValueError(f"{fixed_point_label(S)} is not a fixed point of T*G({k}, {N}).")
    rest = complement(N, S)
    base = [Character.ratio(N, j, i) for i in S for j in rest]
    fibres = [Character.ratio(N, i, j, fibre) for i in S for j in rest]
    return base + fibres


def correspondence_weights(
    N: int, big: Sequence[int], small: Sequence[int], fibre: int = 2
) -> List[Character]:
    """Tangent characters of the Hecke correspondence at the fixed point small < big.

    The correspondence fibres over the two-step flag manifold Fl(|small|, |big|, N),
    with fibre Hom(C^N / V_big, V_small) twisted by t^f."""
    big, small = tuple(big), tuple(small)
    if not set(small) <= set(big):
        raise ValueError(
            f"{fixed_point_label(small)} is not contained in {fixed_point_label(big)}."
        )
    outside = complement(N, big)
    between = [j for j in big if j not in small]
    flag = [Character.ratio(N, j, i) for i in big for j in outside]
    flag += [Character.ratio(N, j, i) for i in small for j in between]
    fibres = [Character.ratio(N, i, j, fibre) for i in small for j in outside]
    return flag + fibres


def euler_class(characters: Sequence[Character], variables: Variables) -> Any:
    "The K-theoretic Euler class prod (1 - 1/w)."
    result = variables.backend.constant(1)
    for w in characters:
        result = result * (1 - 1 / w.value(variables))
    return result


def det_class(S: Sequence[int], variables: Variables) -> Any:
    "det(V) at V_S, i.e. prod_{i in S} x_i."
    exponents = [0] * variables.n
    for i in S:
        exponents[i] += 1
    return variables.monomial(exponents)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
