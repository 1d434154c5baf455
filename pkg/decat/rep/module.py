"""The :class:`IntegrableModule` container.

A module stores, for every weight lambda in its support, the dimension of M(lambda), the
labels of the chosen basis vectors, the contravariant form on M(lambda) and the matrices
of the Chevalley generators e_i: M(lambda) -> M(lambda + alpha_i) and
f_i: M(lambda) -> M(lambda - alpha_i). Matrices are numpy object arrays of
:class:`~decat.qlaurent.fraction.QFraction`; their columns are indexed by the source
basis and their rows by the target basis.

Modules are built by :func:`decat.rep.builder.build_module` or read back by
:func:`decat.rep.serialization.load_module`, and never change afterwards.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from decat.core.cartan import CartanData, Vertex, Weight
from decat.errors import InternalConsistencyError, TruncatedModuleError
from decat.qlaurent import linalg
from decat.qlaurent.fraction import QFraction
from decat.qlaurent.quantum import qfactorial

logger = logging.getLogger(__name__)

E = "E"
F = "F"

# (vertex position, source weight) -> matrix
GeneratorMatrices = Dict[Tuple[int, Weight], np.ndarray]


@dataclass(frozen=True, eq=False)
class IntegrableModule:
    """An integrable highest-weight module V(Lambda_w), possibly truncated at a depth.

    A truncated module knows every weight space of height at most ``depth_limit`` and
    the e-matrices between them, but not the f-matrices leaving the deepest layer.
    """

    cartan: CartanData
    w: Tuple[int, ...]
    depth_limit: int
    truncated: bool
    support: Dict[Weight, int]
    labels: Dict[Weight, Tuple[str, ...]]
    e_matrices: GeneratorMatrices = field(repr=False)
    f_matrices: GeneratorMatrices = field(repr=False)
    gram: Dict[Weight, np.ndarray] = field(repr=False)
    _divided_powers: dict = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    @property
    def highest_weight(self) -> Weight:
        return Weight.highest(self.w)

    @property
    def weights(self) -> List[Weight]:
        "The support, ordered by height and then by v."
        return sorted(self.support, key=Weight.sort_key)

    @property
    def total_dimension(self) -> int:
        return sum(self.support.values())

    def dim(self, weight: Weight) -> int:
        return self.support.get(weight, 0)

    def within_depth(self, weight: Weight) -> bool:
        return weight.height <= self.depth_limit

    def _generator(self, direction: str, i: Vertex, weight: Weight) -> np.ndarray:
        k = self.cartan.index(i)
        if direction == E:
            target = weight.plus_root(k)
            matrices = self.e_matrices
        else:
            target = weight.plus_root(k, -1)
            matrices = self.f_matrices
            if self.truncated and target.height > self.depth_limit and self.dim(weight):
                raise TruncatedModuleError(
                    f"f_{self.cartan.vertices[k]} on M({weight}) leaves the truncation "
                    f"depth {self.depth_limit}."
                )
        matrix = matrices.get((k, weight))
        if matrix is None:
            return linalg.zeros(self.dim(target), self.dim(weight))
        return matrix

    def e(self, i: Vertex, weight: Weight) -> np.ndarray:
        "Matrix of e_i: M(lambda) -> M(lambda + alpha_i)."
        return self._generator(E, i, weight)

    def f(self, i: Vertex, weight: Weight) -> np.ndarray:
        "Matrix of f_i: M(lambda) -> M(lambda - alpha_i)."
        return self._generator(F, i, weight)

    def power_matrix(self, direction: str, i: Vertex, r: int, weight: Weight) -> np.ndarray:
        "Matrix of e_i^r (or f_i^r) on M(lambda), as a product of r generator matrices."
        if direction not in (E, F):
            raise ValueError(f"direction must be '{E}' or '{F}', got {direction!r}.")
        k = self.cartan.index(i)
        step = 1 if direction == E else -1
        result = linalg.identity(self.dim(weight))
        current = weight
        for _ in range(r):
            result = linalg.matmul(self._generator(direction, k, current), result)
            current = current.plus_root(k, step)
        return result

    def divided_power_matrix(
        self, i: Vertex, r: int, weight: Weight, direction: str = E
    ) -> np.ndarray:
        """Matrix of e_i^(r) = e_i^r / [r]! (or of f_i^(r)) on M(lambda).

        The result is cached. Division by [r]! must be exact on every entry: multiplying
        the quotient back must reproduce e_i^r, otherwise InternalConsistencyError is
        raised.
        """
        if r < 0:
            raise ValueError(f"The power r must be nonnegative, got {r}.")
        k = self.cartan.index(i)
        if r == 0:
            return linalg.identity(self.dim(weight))
        if r == 1:
            return self._generator(direction, k, weight)
        key = (direction, k, r, weight)
        with self._lock:
            cached = self._divided_powers.get(key)
        if cached is not None:
            return cached
        power = self.power_matrix(direction, k, r, weight)
        factorial = QFraction(qfactorial(r))
        result = np.empty(power.shape, dtype=object)
        for index, entry in np.ndenumerate(power):
            quotient = linalg.as_qfraction(entry) / factorial
            if quotient * factorial != entry:
                raise InternalConsistencyError(
                    f"{direction}_{self.cartan.vertices[k]}^{r} on M({weight}): entry "
                    f"{entry} is not divisible by [{r}]!."
                )
            result[index] = quotient
        with self._lock:
            self._divided_powers[key] = result
        return result

    def character(self) -> Dict[Weight, int]:
        "The multiplicity map lambda -> dim M(lambda). Needs a complete module."
        if self.truncated:
            raise TruncatedModuleError(
                f"The character of V({self.highest_weight}) is unknown beyond depth "
                f"{self.depth_limit}."
            )
        return {weight: self.support[weight] for weight in self.weights}

    def string_length(self, i: Vertex, weight: Weight, direction: str = E) -> Optional[int]:
        """The largest r with e_i^r (or f_i^r) nonzero on M(lambda) as far as the support
        goes; None if the string leaves a truncated module."""
        k = self.cartan.index(i)
        step = 1 if direction == E else -1
        r = 0
        current = weight.plus_root(k, step)
        while self.dim(current):
            if self.truncated and not self.within_depth(current):
                return None
            r += 1
            current = current.plus_root(k, step)
        if self.truncated and not self.within_depth(current):
            return None
        return r
