from fractions import Fraction
from functools import lru_cache
from typing import Optional

import sympy

from decat.errors import InternalConsistencyError
from decat.fieldmath.backend import Backend, Variables


class SymbolicBackend(Backend):
    "Rational functions as sympy expressions, normalized with sympy.cancel."

    name = "symbolic"

    @lru_cache(maxsize=None)
    def variables(self, n: int) -> Variables:
        x = sympy.symbols(f"x1:{n + 1}") if n else ()
        return Variables(tuple(x), sympy.Symbol("t"), self)

    def constant(self, value):
        value = Fraction(value)
        return sympy.Rational(value.numerator, value.denominator)

    def is_zero(self, value) -> bool:
        return sympy.cancel(sympy.together(value)) == 0

    def as_constant(self, value) -> Optional[Fraction]:
        value = sympy.cancel(sympy.together(value))
        if value.is_Rational:
            return Fraction(int(value.p), int(value.q))
        return None

    def inverse_matrix(self, rows):
        matrix = sympy.Matrix(rows)
        if self.is_zero(matrix.det(method="berkowitz")):
            raise InternalConsistencyError(f"Matrix of size {matrix.rows} is singular.")
        inverse = matrix.inv(method="LU")
        return [
            [sympy.cancel(inverse[i, j]) for j in range(matrix.cols)]
            for i in range(matrix.rows)
        ]

    def render(self, value) -> str:
        return str(sympy.factor(sympy.cancel(sympy.together(value))))

    def describe(self, n: int) -> dict:
        return {"backend": self.name}
