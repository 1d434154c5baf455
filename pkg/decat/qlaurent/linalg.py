"""Exact linear algebra on numpy object arrays.

Matrices are ``numpy.ndarray`` with ``dtype=object`` whose entries are
:class:`~decat.qlaurent.fraction.QFraction` (or, for the generic helpers, any exact
field element such as :class:`fractions.Fraction`). Empty shapes like ``(0, n)`` are
allowed and represent maps to or from the zero space.

Elimination is plain Gauss-Jordan with the first non-zero pivot; exactness makes
pivoting for stability unnecessary.
"""

from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from decat.errors import InternalConsistencyError
from decat.qlaurent.fraction import QFraction

ZERO = QFraction(0)
ONE = QFraction(1)


def as_qfraction(value) -> QFraction:
    return QFraction.coerce(value)


_vectorized_coerce = np.vectorize(as_qfraction, otypes=[object])


def asmatrix(rows) -> np.ndarray:
    "Convert nested sequences (or an array) of scalars to a QFraction object matrix."
    array = np.asarray(rows, dtype=object)
    if array.size == 0:
        return np.empty(array.shape, dtype=object)
    return _vectorized_coerce(array)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.full((rows, cols), ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    matrix = zeros(n, n)
    for k in range(n):
        matrix[k, k] = ONE
    return matrix


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    "Exact matrix product, also for empty inner dimensions."
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Cannot multiply matrices of shapes {a.shape} and {b.shape}.")
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return asmatrix(a.dot(b))


def scale(matrix: np.ndarray, scalar) -> np.ndarray:
    if matrix.size == 0:
        return zeros(*matrix.shape)
    return asmatrix(matrix * as_qfraction(scalar))


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ValueError(f"Cannot add matrices of shapes {a.shape} and {b.shape}.")
    if a.size == 0:
        return zeros(*a.shape)
    return asmatrix(a + b)


def subtract(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return add(a, scale(b, -1))


def is_zero(matrix: np.ndarray) -> bool:
    return all(as_qfraction(entry).is_zero() for entry in matrix.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and is_zero(subtract(a, b))


def evaluate(matrix: np.ndarray, value) -> np.ndarray:
    """Substitute q = value in every entry.

    Raises ZeroDivisionError if a denominator vanishes at the value."""
    result = np.empty(matrix.shape, dtype=object)
    for index, entry in np.ndenumerate(matrix):
        result[index] = as_qfraction(entry).evaluate(value)
    return result


def to_text(matrix: np.ndarray) -> List[List[str]]:
    return [[str(as_qfraction(entry)) for entry in row] for row in matrix]


def from_text(rows: Sequence[Sequence[str]], shape: Tuple[int, int]) -> np.ndarray:
    matrix = zeros(*shape)
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ValueError(f"Matrix text does not have the declared shape {shape}.")
    for i, row in enumerate(rows):
        for j, text in enumerate(row):
            matrix[i, j] = QFraction.parse(text)
    return matrix


def _row_reduce(
    rows: List[list], is_zero: Callable = lambda v: v == 0, num_pivot_cols: Optional[int] = None
) -> List[int]:
    """Bring rows to reduced row echelon form in place; return the pivot columns.

    Only the first ``num_pivot_cols`` columns are used as pivots (all by default), so
    augmented systems [A | B] can be reduced without pivoting into B."""
    if not rows:
        return []
    ncols = len(rows[0]) if num_pivot_cols is None else num_pivot_cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if not is_zero(rows[k][c])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = 1 / rows[r][c]
        rows[r] = [entry * inverse for entry in rows[r]]
        for k in range(len(rows)):
            if k != r and not is_zero(rows[k][c]):
                factor = rows[k][c]
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def gauss_jordan_inverse(
    matrix: Sequence[Sequence], is_zero: Callable = lambda v: v == 0, one=Fraction(1)
) -> List[list]:
    """Invert a square matrix over any exact field.

    >>> gauss_jordan_inverse([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    [[Fraction(1, 1), Fraction(-1, 1)], [Fraction(-1, 1), Fraction(2, 1)]]
    """
    n = len(matrix)
    zero = one - one
    rows = [
        list(row) + [one if i == j else zero for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    pivots = _row_reduce(rows, is_zero, num_pivot_cols=n)
    if len(pivots) != n:
        raise InternalConsistencyError(f"Matrix of size {n}x{n} is singular.")
    return [row[n:] for row in rows]


def inverse(matrix: np.ndarray) -> np.ndarray:
    "Exact inverse of a square QFraction matrix."
    n, m = matrix.shape
    if n != m:
        raise ValueError(f"Only square matrices can be inverted, got shape {matrix.shape}.")
    if n == 0:
        return zeros(0, 0)
    rows = [[as_qfraction(e) for e in row] for row in matrix]
    return asmatrix(gauss_jordan_inverse(rows, lambda v: v.is_zero(), one=ONE))


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a @ x = b exactly for a matrix a of full column rank.

    Raises InternalConsistencyError if a is rank deficient or the system is
    inconsistent."""
    m, n = a.shape
    if b.shape[0] != m:
        raise ValueError(f"Incompatible shapes {a.shape} and {b.shape}.")
    k = b.shape[1]
    if n == 0:
        if not is_zero(b):
            raise InternalConsistencyError("Inconsistent system with no unknowns.")
        return zeros(0, k)
    rows = [
        [as_qfraction(e) for e in a[i]] + [as_qfraction(e) for e in b[i]]
        for i in range(m)
    ]
    pivots = _row_reduce(rows, lambda v: v.is_zero(), num_pivot_cols=n)
    if len(pivots) != n:
        raise InternalConsistencyError(
            f"Coefficient matrix of shape {a.shape} has rank {len(pivots)} < {n}."
        )
    for row in rows[n:]:
        if any(not e.is_zero() for e in row[n:]):
            raise InternalConsistencyError("Inconsistent linear system.")
    return asmatrix([row[n:] for row in rows[:n]])


def rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    rows = [[as_qfraction(e) for e in row] for row in matrix]
    return len(_row_reduce(rows, lambda v: v.is_zero()))


def determinant(matrix: np.ndarray) -> QFraction:
    n, m = matrix.shape
    if n != m:
        raise ValueError(f"Determinant of a non-square matrix of shape {matrix.shape}.")
    rows = [[as_qfraction(e) for e in row] for row in matrix]
    det = ONE
    for c in range(n):
        pivot = next((k for k in range(c, n) if not rows[k][c].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det = det * rows[c][c]
        inverse_pivot = rows[c][c].inverse()
        for k in range(c + 1, n):
            if not rows[k][c].is_zero():
                factor = rows[k][c] * inverse_pivot
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[c])]
    return det


def is_positive_definite(matrix: Sequence[Sequence[Fraction]]) -> bool:
    """Exact positive-definiteness test of a symmetric rational matrix.

    >>> is_positive_definite([[2, -1], [-1, 2]])
    True
    >>> is_positive_definite([[2, -2], [-2, 2]])
    False
    """
    rows = [[Fraction(e) for e in row] for row in matrix]
    n = len(rows)
    for c in range(n):
        pivot = rows[c][c]
        if pivot <= 0:
            return False
        for k in range(c + 1, n):
            factor = rows[k][c] / pivot
            if factor:
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[c])]
    return True


class IncrementalBasis:
    """Greedy independence test for a stream of vectors.

    Stored vectors are kept reduced against the earlier pivots, so reducing a new
    vector against them in insertion order leaves zeros at every pivot.

    >>> basis = IncrementalBasis()
    >>> basis.add([ONE, ZERO]), basis.add([ONE, ZERO]), basis.add([ONE, ONE])
    (True, False, True)
    """

    def __init__(self):
        self._rows: List[Tuple[int, List[QFraction]]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence) -> List[QFraction]:
        vector = [as_qfraction(e) for e in vector]
        for pivot, row in self._rows:
            if not vector[pivot].is_zero():
                factor = vector[pivot] / row[pivot]
                vector = [a - factor * b for a, b in zip(vector, row)]
        return vector

    def add(self, vector: Sequence) -> bool:
        "Add the vector if it is independent of the stored ones; return True if so."
        reduced = self.reduce(vector)
        pivot = next((k for k, e in enumerate(reduced) if not e.is_zero()), None)
        if pivot is None:
            return False
        self._rows.append((pivot, reduced))
        return True


def laurent_entries(matrix: np.ndarray) -> bool:
    "True if every entry has denominator 1."
    return all(as_qfraction(e).is_laurent() for e in matrix.flat)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
