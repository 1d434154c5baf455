"""Kernel matrices of the sl2 Hecke correspondences, by localization.

A kernel P from X = T*G(k, N) to Y = T*G(k', N) is stored by its restrictions P(S, S')
to the fixed points (V_S, V_S') of X x Y: rows are indexed by the fixed points of the
source and columns by those of the target. For a kernel supported on a smooth
correspondence B, tensored with a line bundle and shifted,

    P(S, S') = twist(S, S') * s^shift * e(T_S X) e(T_S' Y) / e(T_(S, S') B)

with e the K-theoretic Euler class. The induced map on localized K-theory sends the
row vector (c(S))_S to c diag(1/e(T X)) P, see :meth:`KTheoryModel.operator`, and
convolution of kernels is

    (Q * P)(S, S'') = sum_M P(S, M) Q(M, S'') / e(T_M Y).

Twists and shifts come from :func:`decat.quiver.kernel_spec.grassmannian_spec`.
Structural zeros (pairs of fixed points off the correspondence) are stored as the int 0.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from decat.fieldmath import Backend, backend_manager
from decat.ktheory.grassmannian import (
    FixedPoint,
    TangentConvention,
    correspondence_weights,
    det_class,
    euler_class,
    fixed_point_label,
    fixed_points,
    tangent_weights,
)
from decat.quiver.kernel_spec import (
    DET_FRAMING,
    DET_SOURCE,
    DET_TARGET,
    E,
    F,
    THETA,
    GrassmannianKernelSpec,
    grassmannian_spec,
)

logger = logging.getLogger(__name__)

Matrix = List[List[Any]]


def is_structural_zero(value) -> bool:
    return isinstance(value, int) and value == 0


@dataclass
class KernelMatrix:
    name: str
    N: int
    source_k: int
    target_k: int
    rows: Matrix = field(repr=False)
    spec: Optional[GrassmannianKernelSpec] = field(default=None, repr=False)

    @property
    def sources(self) -> List[FixedPoint]:
        return fixed_points(self.N, self.source_k)

    @property
    def targets(self) -> List[FixedPoint]:
        return fixed_points(self.N, self.target_k)

    def entry(self, S: FixedPoint, S_prime: FixedPoint):
        return self.rows[self.sources.index(tuple(S))][self.targets.index(tuple(S_prime))]

    def support(self) -> List[tuple]:
        "Pairs of fixed points where the entry is not a structural zero."
        return [
            (S, T)
            for S, row in zip(self.sources, self.rows)
            for T, value in zip(self.targets, row)
            if not is_structural_zero(value)
        ]


class KTheoryModel:
    """Localized K-theory of T*G(k, N) for all k, under one tangent convention.

    Values are computed with ``backend`` (the active fieldmath backend by default). The
    dual model evaluates every class at x -> 1/x, t -> 1/t, which is how duals of
    kernels are computed.

    >>> from decat.fieldmath import backend_manager
    >>> with backend_manager.using_backend("symbolic") as backend:
    ...     model = KTheoryModel(2, backend=backend)
    ...     print(backend.render(model.theta(1).rows[1][1] / model.euler(1, (1,))))
    -t*x2
    """

    def __init__(
        self,
        N: int,
        convention: TangentConvention = TangentConvention(),
        backend: Optional[Backend] = None,
        is_dual: bool = False,
    ):
        if N < 0:
            raise ValueError(f"N must be nonnegative, got {N}.")
        self.N = N
        self.convention = convention
        self.backend = backend if backend is not None else backend_manager.active_backend
        self.is_dual = is_dual
        variables = self.backend.variables(N)
        self.variables = variables.dual() if is_dual else variables
        self._cache: Dict[tuple, Any] = {}
        self._lock = threading.Lock()
        self._dual: Optional["KTheoryModel"] = None

    def dual(self) -> "KTheoryModel":
        "The dual model (built once)."
        with self._lock:
            if self._dual is None:
                self._dual = KTheoryModel(self.N, self.convention, self.backend, not self.is_dual)
                self._dual._dual = self
            return self._dual

    def cached(self, key: tuple, compute: Callable[[], Any]):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    def constant(self, value):
        return self.backend.constant(value)

    def _check_k(self, k: int):
        if not 0 <= k <= self.N:
            raise ValueError(f"T*G(k, N) needs 0 <= k <= N, got k={k}, N={self.N}.")

    def euler(self, k: int, S: Sequence[int]):
        "e(T_S T*G(k, N))."
        S = tuple(S)
        return self.cached(
            ("euler", k, S),
            lambda: euler_class(
                tangent_weights(self.N, k, S, self.convention.fibre), self.variables
            ),
        )

    def canonical(self, k: int):
        "The character of the canonical bundle of T*G(k, N): t^(-f k (N - k))."
        return self.variables.t ** (-self.convention.fibre * k * (self.N - k))

    def line_bundle(self, L_exponent: int, S: Sequence[int], S_prime: Sequence[int]):
        "L^m at (V_S, V_S') with L = det(V) det(V') det(C^N)^-1."
        return self._twist({DET_SOURCE: L_exponent, DET_TARGET: L_exponent, DET_FRAMING: -L_exponent}, S, S_prime)

    def _twist(self, exponents: Dict[str, int], S, S_prime):
        x = self.variables
        value = self.constant(1)
        for name, points in ((DET_SOURCE, S), (DET_TARGET, S_prime), (DET_FRAMING, range(self.N))):
            power = exponents.get(name, 0)
            if power:
                value = value * det_class(tuple(points), x) ** power
        return value

    # Primitive kernels

    def identity(self, k: int) -> KernelMatrix:
        "The structure sheaf of the diagonal: diag(e(T_S))."
        self._check_k(k)
        points = fixed_points(self.N, k)
        rows = [
            [self.euler(k, S) if S == T else 0 for T in points] for S in points
        ]
        return KernelMatrix(f"id({k})", self.N, k, k, rows)

    def _hecke(self, direction: str, r: int, k: int) -> KernelMatrix:
        spec = grassmannian_spec(direction, r, k, self.N)
        exponents = {name: spec.twist.exponent(name) for name in (DET_SOURCE, DET_TARGET, DET_FRAMING)}
        shift = self.convention.shift(self.variables, spec.equivariant_shift)
        rows = []
        for S in fixed_points(self.N, spec.source_k):
            row = []
            for T in fixed_points(self.N, spec.target_k):
                big, small = (S, T) if direction == E else (T, S)
                if not set(small) <= set(big):
                    row.append(0)
                    continue
                weights = correspondence_weights(self.N, big, small, self.convention.fibre)
                value = (
                    self._twist(exponents, S, T)
                    * shift
                    * self.euler(spec.source_k, S)
                    * self.euler(spec.target_k, T)
                    / euler_class(weights, self.variables)
                )
                row.append(value)
            rows.append(row)
        name = f"{direction}^({r})({k})" if r != 1 else f"{direction}({k})"
        return KernelMatrix(name, self.N, spec.source_k, spec.target_k, rows, spec)

    def e_kernel(self, r: int, k: int) -> KernelMatrix:
        "E^(r) from T*G(k, N) to T*G(k - r, N)."
        if r == 0:
            return self.identity(k)
        return self.cached(("E", r, k), lambda: self._hecke(E, r, k))

    def f_kernel(self, r: int, k: int) -> KernelMatrix:
        "F^(r) from T*G(k, N) to T*G(k + r, N)."
        if r == 0:
            return self.identity(k)
        return self.cached(("F", r, k), lambda: self._hecke(F, r, k))

    def theta(self, k: int, power: int = 1) -> KernelMatrix:
        "Tensoring by det(V_i)^power: diag((x_S s^k)^power e(T_S))."
        spec = grassmannian_spec(THETA, 0, k, self.N)
        shift = self.convention.shift(self.variables, power * spec.equivariant_shift)
        points = fixed_points(self.N, k)
        rows = [
            [
                det_class(S, self.variables) ** power * shift * self.euler(k, S) if S == T else 0
                for T in points
            ]
            for S in points
        ]
        return KernelMatrix(f"Theta^{power}({k})", self.N, k, k, rows, spec)

    # Kernel algebra

    def compose(self, A: KernelMatrix, B: KernelMatrix) -> KernelMatrix:
        "The convolution A * B, i.e. the kernel of A o B (B acts first)."
        if B.target_k != A.source_k or A.N != B.N:
            raise ValueError(
                f"Cannot compose {A.name} after {B.name}: {B.name} ends at k={B.target_k}, "
                f"{A.name} starts at k={A.source_k}."
            )
        middle = fixed_points(self.N, B.target_k)
        weights = [1 / self.euler(B.target_k, M) for M in middle]
        rows = []
        for b_row in B.rows:
            row = []
            for column in range(len(A.rows[0]) if A.rows else 0):
                total = 0
                for m, inverse_euler in enumerate(weights):
                    left, right = b_row[m], A.rows[m][column]
                    if is_structural_zero(left) or is_structural_zero(right):
                        continue
                    total = total + left * right * inverse_euler
                row.append(total)
            rows.append(row)
        return KernelMatrix(f"{A.name} {B.name}", self.N, B.source_k, A.target_k, rows)

    def combine(self, terms: Sequence[tuple], name: str) -> KernelMatrix:
        """The linear combination sum c * P of (c, P) pairs with the same source and
        target; the coefficients are backend values or rationals."""
        if not terms:
            raise ValueError("Cannot combine an empty list of kernels.")
        first = terms[0][1]
        rows = [[0] * len(first.rows[0]) for _ in first.rows] if first.rows else []
        for coefficient, kernel in terms:
            if (kernel.source_k, kernel.target_k) != (first.source_k, first.target_k):
                raise ValueError(f"{kernel.name} and {first.name} have different shapes.")
            for i, row in enumerate(kernel.rows):
                for j, value in enumerate(row):
                    if not is_structural_zero(value):
                        rows[i][j] = rows[i][j] + coefficient * value
        return KernelMatrix(name, self.N, first.source_k, first.target_k, rows)

    def difference(self, A: KernelMatrix, B: KernelMatrix) -> KernelMatrix:
        return self.combine([(1, A), (-1, B)], f"{A.name} - {B.name}")

    def is_zero(self, kernel: KernelMatrix) -> bool:
        return all(
            is_structural_zero(value) or self.backend.is_zero(value)
            for row in kernel.rows
            for value in row
        )

    def first_nonzero(self, kernel: KernelMatrix) -> Optional[dict]:
        for S, row in zip(kernel.sources, kernel.rows):
            for T, value in zip(kernel.targets, row):
                if not is_structural_zero(value) and not self.backend.is_zero(value):
                    return {
                        "source": fixed_point_label(S),
                        "target": fixed_point_label(T),
                        "value": self.backend.render(value),
                    }
        return None

    # Operators on localized K-theory

    def operator(self, kernel: KernelMatrix) -> Matrix:
        "The matrix diag(1/e(T_S X)) P of the induced map on row vectors."
        return [
            [value if is_structural_zero(value) else value / self.euler(kernel.source_k, S) for value in row]
            for S, row in zip(kernel.sources, kernel.rows)
        ]

    def apply(self, kernel: KernelMatrix, vector: Sequence) -> List:
        "Push a class, given by its restrictions to the source fixed points, through P."
        if len(vector) != len(kernel.rows):
            raise ValueError(f"{kernel.name} needs a vector of length {len(kernel.rows)}.")
        return multiply([list(vector)], self.operator(kernel))[0]

    def render(self, kernel: KernelMatrix) -> List[List[str]]:
        return [[self.backend.render(value) for value in row] for row in kernel.rows]


def multiply(a: Matrix, b: Matrix) -> Matrix:
    "Product of two matrices of backend values."
    columns = len(b[0]) if b else 0
    result = []
    for row in a:
        out = []
        for j in range(columns):
            total = 0
            for m, left in enumerate(row):
                right = b[m][j]
                if is_structural_zero(left) or is_structural_zero(right):
                    continue
                total = total + left * right
            out.append(total)
        result.append(out)
    return result


def adjoint(model: KTheoryModel, build: Callable[[KTheoryModel], KernelMatrix], side: str) -> KernelMatrix:
    """The right or left adjoint of the kernel produced by ``build``.

    P_R = P^dual (x) p_1^* omega_X [dim X] and P_L = P^dual (x) p_2^* omega_Y [dim Y];
    with the canonical bundles of T*G(k, N) equivariantly trivial, this gives
    P_R(S', S) = P^dual(S, S') omega_X (-1)^dim X, and the same with Y for P_L. The dual
    kernel is ``build`` evaluated in the dual model, so any kernel assembled from the
    primitive constructors can be adjoined."""
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}.")
    kernel = build(model)
    dual = build(model.dual())
    k = kernel.source_k if side == "right" else kernel.target_k
    factor = model.canonical(k) * (-1) ** (2 * k * (model.N - k))
    rows = [
        [
            0 if is_structural_zero(dual.rows[i][j]) else dual.rows[i][j] * factor
            for i in range(len(dual.rows))
        ]
        for j in range(len(dual.rows[0]) if dual.rows else 0)
    ]
    suffix = "_R" if side == "right" else "_L"
    return KernelMatrix(f"({kernel.name}){suffix}", model.N, kernel.target_k, kernel.source_k, rows)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
