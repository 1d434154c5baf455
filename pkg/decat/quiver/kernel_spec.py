"""Grading data (line-bundle twists and equivariant shifts) of the Hecke kernels.

The kernels E^(r)_i(lambda) and F^(r)_i(lambda) are structure sheaves of the Hecke
correspondence B^(r)_i(lambda), a subvariety of M(lambda) x M(lambda + r alpha_i),
tensored with a line bundle and shifted. Nothing here computes sheaves: a
:class:`KernelSpec` records the line bundle as a formal word in determinant bundles,
together with the equivariant shift.

On B^(r)_i(lambda), V_i is the tautological bundle coming from M(lambda) (rank v_i) and
V'_i the one from M(lambda + r alpha_i) (rank v_i - r).

>>> from decat.core.cartan import GraphData, Weight, build_cartan
>>> a2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))
>>> spec = kernel_spec("E", a2, Weight((1, 1), (1, 1)), "1", 1)
>>> print(spec.twist)
det(V_i)^1 det(V'_i)^1 prod det(V_out(h))^-1
>>> spec.equivariant_shift, spec.target
(-1, Weight(w=(1, 1), v=(0, 1)))

For sl2 the same kernels between cotangent bundles of Grassmannians are described by
:func:`grassmannian_spec`, in terms of the tautological bundles V (rank k, source) and
V' (target) and the trivial bundle C^N.
"""

from dataclasses import dataclass
from typing import Tuple

from decat.core.cartan import (
    CartanData,
    Vertex,
    Weight,
    framing_pairing,
    pair,
    symmetric_pairing,
)

E = "E"
F = "F"
THETA = "Theta"


@dataclass(frozen=True)
class LineBundleWord:
    """A formal product of powers of named line bundles, e.g. det(V_i)^r.

    Factors with exponent 0 are dropped and the order of the remaining factors is kept.
    """

    factors: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple((name, int(e)) for name, e in self.factors if e)
        )

    def exponent(self, name: str) -> int:
        return sum(e for n, e in self.factors if n == name)

    def __str__(self) -> str:
        if not self.factors:
            return "O"
        return " ".join(f"{name}^{e}" for name, e in self.factors)


DET_V = "det(V_i)"
DET_V_PRIME = "det(V'_i)"
DET_OUT = "prod det(V_out(h))"


@dataclass(frozen=True)
class KernelSpec:
    "Twist and equivariant shift of E^(r)_i(lambda) or F^(r)_i(lambda)."

    direction: str
    vertex: str
    vertex_index: int
    r: int
    weight: Weight
    twist: LineBundleWord
    equivariant_shift: int

    @property
    def raised(self) -> Weight:
        "lambda + r alpha_i."
        return self.weight.plus_root(self.vertex_index, self.r)

    @property
    def source(self) -> Weight:
        return self.weight if self.direction == E else self.raised

    @property
    def target(self) -> Weight:
        return self.raised if self.direction == E else self.weight


def kernel_spec(direction: str, cd: CartanData, weight: Weight, i: Vertex, r: int) -> KernelSpec:
    """The grading data of E^(r)_i(lambda) (from M(lambda) to M(lambda + r alpha_i)) or
    F^(r)_i(lambda) (from M(lambda + r alpha_i) to M(lambda)).

    E is twisted by det(V'_i)^r det(V_i)^r prod det(V_out(h))^-r and shifted by
    {-r v_i}; F is twisted by det(V'_i / V_i)^(<lambda, alpha_i> + r) and shifted by
    {r (v_i - r)}.
    """
    if r < 1:
        raise ValueError(f"The power r must be positive, got {r}.")
    k = cd.index(i)
    v_i = weight.v[k]
    if direction == E:
        twist = LineBundleWord(((DET_V, r), (DET_V_PRIME, r), (DET_OUT, -r)))
        shift = -r * v_i
    elif direction == F:
        m = pair(cd, weight, k) + r
        twist = LineBundleWord(((DET_V, -m), (DET_V_PRIME, m)))
        shift = r * (v_i - r)
    else:
        raise ValueError(f"direction must be '{E}' or '{F}', got {direction!r}.")
    return KernelSpec(direction, cd.vertices[k], k, r, weight, twist, shift)


@dataclass(frozen=True)
class CanonicalBundle:
    twist: LineBundleWord
    equivariant_shift: int


def hecke_canonical_shift(cd: CartanData, weight: Weight, i: Vertex, r: int) -> CanonicalBundle:
    """The canonical bundle of B^(r)_i(lambda).

    It is det(V_i/V'_i)^n det(V_i)^(2r) prod det(V_out(h))^-r with n = <lambda, alpha_i>,
    shifted by {-r n - 2r^2 - 2 <Lambda_w, alpha_v'> + <alpha_v', alpha_v'>} where
    v' = v - r e_i."""
    if r < 1:
        raise ValueError(f"The power r must be positive, got {r}.")
    k = cd.index(i)
    n = pair(cd, weight, k)
    v_prime = weight.plus_root(k, r).v
    twist = LineBundleWord(((DET_V, n + 2 * r), (DET_V_PRIME, -n), (DET_OUT, -r)))
    shift = (
        -r * n
        - 2 * r * r
        - 2 * framing_pairing(weight.w, v_prime)
        + symmetric_pairing(cd, v_prime, v_prime)
    )
    return CanonicalBundle(twist, shift)


DET_SOURCE = "det(V)"
DET_TARGET = "det(V')"
DET_FRAMING = "det(C^N)"


@dataclass(frozen=True)
class GrassmannianKernelSpec:
    """Grading data of a kernel between T*G(source_k, N) and T*G(target_k, N)."""

    direction: str
    r: int
    source_k: int
    target_k: int
    n: int
    twist: LineBundleWord
    equivariant_shift: int


def grassmannian_spec(direction: str, r: int, k: int, N: int) -> GrassmannianKernelSpec:
    """sl2 kernels with source T*G(k, N).

    * E^(r) (target k - r): L^r {r(k - r)} with L = det(V) det(V') det(C^N)^-1.
    * F^(r) (target K = k + r): det(V'/V)^(N - 2K + r) {r(N - K)}.
    * Theta (target k): det(V_i) = det(V) {k}, since the tautological bundle V_i of the
      quiver variety is V {1}.
    """
    if direction == E:
        if not 0 <= r <= k <= N:
            raise ValueError(f"E^({r}) needs 0 <= r <= k <= N, got k={k}, N={N}.")
        twist = LineBundleWord(((DET_SOURCE, r), (DET_TARGET, r), (DET_FRAMING, -r)))
        return GrassmannianKernelSpec(E, r, k, k - r, N, twist, r * (k - r))
    if direction == F:
        if not (0 <= r and 0 <= k and k + r <= N):
            raise ValueError(f"F^({r}) needs 0 <= k and k + r <= N, got k={k}, N={N}.")
        big = k + r
        m = N - 2 * big + r
        twist = LineBundleWord(((DET_SOURCE, -m), (DET_TARGET, m)))
        return GrassmannianKernelSpec(F, r, k, big, N, twist, r * (N - big))
    if direction == THETA:
        if not 0 <= k <= N:
            raise ValueError(f"Theta needs 0 <= k <= N, got k={k}, N={N}.")
        return GrassmannianKernelSpec(THETA, 0, k, k, N, LineBundleWord(((DET_SOURCE, 1),)), k)
    raise ValueError(f"direction must be one of E, F, Theta; got {direction!r}.")
