"""Comparing kernel matrices up to a uniform monomial sign * t^e * det(C^N)^m.

Most identities between kernels hold only up to an overall shift and a twist by a power
of det(C^N) = x_1 ... x_N, so they are checked by computing the ratio of the two sides
and recognizing it as such a monomial.
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

from decat.fieldmath import Backend, Variables
from decat.ktheory.kernels import is_structural_zero


@dataclass(frozen=True)
class Monomial:
    sign: int
    t: int
    det: int = 0

    def value(self, variables: Variables):
        return (
            variables.backend.constant(self.sign)
            * variables.t**self.t
            * variables.monomial([self.det] * variables.n)
        )

    def to_json(self) -> dict:
        return {"sign": self.sign, "t_exponent": self.t, "det_exponent": self.det}

    def __str__(self) -> str:
        parts = []
        if self.t:
            parts.append(f"t^{self.t}")
        if self.det:
            parts.append(f"det^{self.det}")
        body = " ".join(parts) or "1"
        return ("-" if self.sign < 0 else "") + body


@dataclass(frozen=True)
class ShiftForm:
    """A global convention for identities that hold up to a shift depending on an
    integer m: the ratio of the two sides is alpha * (beta t)^(sigma m).

    >>> form = ShiftForm(sigma=-1, beta=-1)
    >>> str(form), str(form.monomial(3)), str(form.monomial(-2))
    ('(-t)^(-m)', '-t^-3', 't^2')
    """

    sigma: int
    beta: int = 1
    alpha: int = 1

    def monomial(self, m: int) -> Monomial:
        sign = self.alpha * (self.beta if m % 2 else 1)
        return Monomial(sign, self.sigma * m)

    def matches(self, monomial: Optional[Monomial], m: int) -> bool:
        return monomial == self.monomial(m)

    def to_json(self) -> dict:
        return {"form": str(self), "sigma": self.sigma, "beta": self.beta, "alpha": self.alpha}

    def __str__(self) -> str:
        base = "(-t)" if self.beta < 0 else "t"
        power = "m" if self.sigma > 0 else "(-m)"
        return ("-" if self.alpha < 0 else "") + f"{base}^{power}"


SHIFT_FORMS = tuple(
    ShiftForm(sigma, beta, alpha) for sigma in (-1, 1) for beta in (1, -1) for alpha in (1, -1)
)


def _search_order(bound: int) -> List[int]:
    "0, -1, 1, -2, 2, .. up to the bound."
    order = [0]
    for e in range(1, bound + 1):
        order += [-e, e]
    return order


def search_bounds(N: int) -> tuple:
    "Bounds on |e| and |m| for monomials arising from T*G(k, N)."
    return 2 * N * N + 8, 2 * N + 2


def match_monomial(value, variables: Variables, t_bound: int, det_bound: int) -> Optional[Monomial]:
    """Recognize value as sign * t^e * det^m with |e| <= t_bound and |m| <= det_bound.

    Small |m| is tried first, and for each m small |e|."""
    backend = variables.backend
    if is_structural_zero(value) or backend.is_zero(value):
        return None
    det = variables.monomial([1] * variables.n)
    for m in _search_order(det_bound):
        scaled = value / det**m if m else value
        for e in _search_order(t_bound):
            c = backend.as_constant(scaled / variables.t**e if e else scaled)
            if c is not None and c in (1, -1):
                return Monomial(int(c), e, m)
    return None


@dataclass
class RatioComparison:
    """Result of comparing two matrices of the same shape entrywise.

    ``ratio`` is the common ratio lhs / rhs (None if both sides vanish), ``monomial`` its
    recognized form and ``counterexample`` the position of the first entry that breaks
    the uniformity."""

    uniform: bool
    ratio: Any = None
    monomial: Optional[Monomial] = None
    counterexample: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.uniform and self.monomial is not None

    def holds_with(self, expected: Monomial) -> bool:
        "Whether lhs = expected * rhs exactly (trivially so when both sides vanish)."
        return self.uniform and (self.ratio is None or self.monomial == expected)

    def details(self, backend: Backend) -> dict:
        details = {"uniform": self.uniform}
        if self.monomial is not None:
            details["ratio"] = str(self.monomial)
            details["monomial"] = self.monomial.to_json()
        elif self.ratio is not None:
            details["ratio"] = backend.render(self.ratio)
        if self.counterexample is not None:
            details["counterexample"] = list(self.counterexample)
        return details


def _vanishes(backend: Backend, value) -> bool:
    return is_structural_zero(value) or backend.is_zero(value)


def compare_uniform(
    lhs: Sequence[Sequence[Any]],
    rhs: Sequence[Sequence[Any]],
    variables: Variables,
    bounds: Optional[tuple] = None,
) -> RatioComparison:
    "Check lhs = c * rhs entrywise for a single c, and recognize c as a monomial."
    backend = variables.backend
    if len(lhs) != len(rhs) or any(len(a) != len(b) for a, b in zip(lhs, rhs)):
        return RatioComparison(False, counterexample=("shape",))
    ratio = None
    for i, row in enumerate(rhs):
        for j, value in enumerate(row):
            if not _vanishes(backend, value):
                if _vanishes(backend, lhs[i][j]):
                    return RatioComparison(False, counterexample=(i, j))
                ratio = lhs[i][j] / value
                break
        if ratio is not None:
            break
    for i, row in enumerate(lhs):
        for j, value in enumerate(row):
            other = rhs[i][j]
            if ratio is None:
                mismatch = not _vanishes(backend, value)
            elif _vanishes(backend, other):
                mismatch = not _vanishes(backend, value)
            else:
                mismatch = not backend.is_zero(value - ratio * other)
            if mismatch:
                return RatioComparison(False, ratio, counterexample=(i, j))
    if ratio is None:
        return RatioComparison(True)
    t_bound, det_bound = bounds if bounds is not None else search_bounds(variables.n)
    return RatioComparison(True, ratio, match_monomial(ratio, variables, t_bound, det_bound))


def transpose(rows: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [list(column) for column in zip(*rows)] if rows else []
