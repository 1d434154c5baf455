"""Exact evaluation of rational functions at a fixed set of rational points.

Two rational functions are declared equal when they agree at every point. Points are
chosen so that no non-trivial monomial x^a t^e evaluates to 1 at any point: the
x-coordinates are distinct primes and t is a ratio of two further primes, so by unique
factorization every Euler-class factor (1 - x^a t^e) is non-zero.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence

import numpy as np

from decat.fieldmath.backend import Backend, Variables
from decat.qlaurent.linalg import gauss_jordan_inverse

PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
    79, 83, 89, 97,
)  # fmt: skip
MIN_POINTS = 5


class EvaluationBackend(Backend):
    name = "evaluation"

    def __init__(self, num_points: int = MIN_POINTS, seed: int = 0):
        if num_points < MIN_POINTS:
            raise ValueError(
                f"Identity testing needs at least {MIN_POINTS} points, got {num_points}."
            )
        self.num_points = num_points
        self.seed = seed

    @lru_cache(maxsize=None)
    def points(self, n: int) -> List[tuple]:
        "The evaluation points as tuples (x_1, .., x_n, t) of Fractions."
        if n + 2 > len(PRIMES):
            raise ValueError(f"At most {len(PRIMES) - 2} variables are supported, got {n}.")
        rng = np.random.default_rng([self.seed, n])
        points = []
        for _ in range(self.num_points):
            chosen = [int(p) for p in rng.permutation(PRIMES)[: n + 2]]
            t = Fraction(chosen[n], chosen[n + 1])
            points.append(tuple(Fraction(p) for p in chosen[:n]) + (t,))
        return points

    def _array(self, values: Sequence) -> np.ndarray:
        array = np.empty(len(values), dtype=object)
        array[:] = list(values)
        return array

    def variables(self, n: int) -> Variables:
        points = self.points(n)
        x = tuple(self._array([p[i] for p in points]) for i in range(n))
        t = self._array([p[n] for p in points])
        return Variables(x, t, self)

    def constant(self, value) -> np.ndarray:
        return self._array([Fraction(value)] * self.num_points)

    def _values(self, value) -> list:
        if np.ndim(value) == 0:
            return [Fraction(value)] * self.num_points
        return list(value)

    def is_zero(self, value) -> bool:
        return all(v == 0 for v in self._values(value))

    def as_constant(self, value) -> Optional[Fraction]:
        values = self._values(value)
        return Fraction(values[0]) if all(v == values[0] for v in values) else None

    def inverse_matrix(self, rows):
        n = len(rows)
        per_point = [
            gauss_jordan_inverse(
                [[self._values(rows[i][j])[p] for j in range(n)] for i in range(n)]
            )
            for p in range(self.num_points)
        ]
        return [
            [self._array([per_point[p][i][j] for p in range(self.num_points)]) for j in range(n)]
            for i in range(n)
        ]

    def render(self, value) -> str:
        return "[" + ", ".join(str(v) for v in self._values(value)) + "]"

    def describe(self, n: int) -> dict:
        names = [f"x{i + 1}" for i in range(n)] + ["t"]
        return {
            "backend": self.name,
            "seed": self.seed,
            "points": [
                {name: str(value) for name, value in zip(names, point)}
                for point in self.points(n)
            ],
        }
