from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple


@dataclass(frozen=True, eq=False)
class Variables:
    """The equivariant parameters x_1..x_N and t, as values of some backend.

    For the evaluation backend each variable is a numpy object array holding its value
    at every evaluation point; for the symbolic backend it is a sympy symbol (or, after
    :meth:`dual`, its reciprocal)."""

    x: Tuple[Any, ...]
    t: Any
    backend: "Backend"

    @property
    def n(self) -> int:
        return len(self.x)

    def dual(self) -> "Variables":
        "The substitution x_i -> 1/x_i, t -> 1/t, which dualizes every class."
        return Variables(tuple(1 / x for x in self.x), 1 / self.t, self.backend)

    def monomial(self, x_exponents: Sequence[int], t_exponent: int = 0):
        "Return prod_i x_i^a_i * t^e."
        value = self.backend.constant(1)
        for x, a in zip(self.x, x_exponents):
            if a:
                value = value * x**a
        if t_exponent:
            value = value * self.t**t_exponent
        return value


class Backend:
    """The operations on rational functions in x_1..x_N, t needed by decat.ktheory.

    Values are opaque to callers; they support ``+ - * /`` and integer powers with each
    other and with Python ints and Fractions. Everything else goes through a backend
    method."""

    name: str

    def variables(self, n: int) -> Variables:
        "Return the variables x_1..x_n and t."
        raise NotImplementedError

    def constant(self, value) -> Any:
        "Return the constant rational function with the given (rational) value."
        raise NotImplementedError

    def is_zero(self, value) -> bool:
        "Exact test whether the value is the zero rational function."
        raise NotImplementedError

    def as_constant(self, value) -> Optional[Fraction]:
        "Return the value as a Fraction if it is constant, else None."
        raise NotImplementedError

    def inverse_matrix(self, rows: Sequence[Sequence[Any]]) -> List[List[Any]]:
        """Invert a square matrix of values.

        Raises decat.errors.InternalConsistencyError if the matrix is singular."""
        raise NotImplementedError

    def render(self, value) -> str:
        "A deterministic text form of the value, for reports."
        raise NotImplementedError

    def describe(self, n: int) -> dict:
        "JSON-serializable description of the backend (and its points) for reports."
        raise NotImplementedError

    def equal(self, a, b) -> bool:
        return self.is_zero(a - b)
