"""Laurent polynomials in one variable q with exact rational coefficients.

A :class:`QLaurent` is a sparse map from integer exponents to non-zero
:class:`fractions.Fraction` coefficients. Values are immutable and hashable, and mix
freely with ``int`` and ``Fraction``:

>>> q = QLaurent.monomial(1)
>>> print(q + q**-1)
q + q^-1
>>> print((q + q**-1) ** 2)
q^2 + 2 + q^-2
>>> print(QLaurent.parse("3/2*q^2 - q^-1"))
3/2*q^2 - q^-1
>>> (q + 1) * (q - 1) == q**2 - 1
True

Division by another Laurent polynomial is only available as
:func:`divide_exact`; use :class:`~decat.qlaurent.fraction.QFraction` for general
quotients.
"""

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from decat.errors import InternalConsistencyError

Coefficients = List[Fraction]  # Dense coefficients, lowest degree first.


class QLaurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Rational]] = None):
        cleaned: Dict[int, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient != 0:
                cleaned[int(exponent)] = coefficient
        self._terms = cleaned
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int = 1, coefficient: Rational = 1) -> "QLaurent":
        "Return coefficient * q^exponent."
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: Rational) -> "QLaurent":
        return cls({0: value})

    @classmethod
    def coerce(cls, value) -> "QLaurent":
        "Convert an int, Fraction or QLaurent to a QLaurent."
        if isinstance(value, QLaurent):
            return value
        if isinstance(value, Rational):
            return cls.constant(value)
        raise TypeError(f"Cannot convert {value!r} of type {type(value)} to QLaurent.")

    # Introspection

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        "Iterate over (exponent, coefficient), highest exponent first."
        for exponent in sorted(self._terms, reverse=True):
            yield exponent, self._terms[exponent]

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def degree(self) -> int:
        "The highest exponent. Undefined (ValueError) for the zero polynomial."
        if not self._terms:
            raise ValueError("The zero Laurent polynomial has no degree.")
        return max(self._terms)

    @property
    def low_degree(self) -> int:
        "The lowest exponent. Undefined (ValueError) for the zero polynomial."
        if not self._terms:
            raise ValueError("The zero Laurent polynomial has no low degree.")
        return min(self._terms)

    @property
    def leading_coefficient(self) -> Fraction:
        return self._terms[self.degree]

    # Arithmetic

    def __add__(self, other) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return QLaurent(terms)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "QLaurent":
        return self

    def __sub__(self, other) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        terms: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return QLaurent(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QLaurent":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError(
                    f"Only monomials can be raised to a negative power, got {self}."
                )
            ((e, c),) = self._terms.items()
            return QLaurent({e * exponent: c**exponent})
        result = QLaurent.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("Division of a Laurent polynomial by zero.")
            return QLaurent({e: c / other for e, c in self._terms.items()})
        if isinstance(other, QLaurent):
            from decat.qlaurent.fraction import QFraction

            return QFraction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            from decat.qlaurent.fraction import QFraction

            return QFraction(QLaurent.constant(other), self)
        return NotImplemented

    def shift(self, k: int) -> "QLaurent":
        "Multiply by q^k."
        return QLaurent({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "QLaurent":
        "The bar involution q -> q^-1."
        return QLaurent({-e: c for e, c in self._terms.items()})

    def evaluate(self, value):
        """Substitute q = value.

        The value may be anything supporting ``+``, ``*`` and integer powers, e.g. a
        Fraction, a numpy object array of Fractions or a sympy expression. Rational
        values are evaluated exactly:

        >>> QLaurent.parse("q + q^-1").evaluate(Fraction(2))
        Fraction(5, 2)
        """
        result = 0
        for exponent, coefficient in self._terms.items():
            result = result + coefficient * value**exponent
        return result

    # Comparison

    def __eq__(self, other) -> bool:
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if set(self._terms) <= {0}:
                # Equal to a plain rational; hash like one.
                self._hash = hash(self._terms.get(0, Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Text form

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coefficient in self.items():
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QLaurent('{self}')"

    _TERM = re.compile(
        r"^(?P<coef>\d+(?:/\d+)?)?(?:(?(coef)\*)q(?:\^(?P<exp>-?\d+))?)?$"
    )

    @classmethod
    def parse(cls, text: str) -> "QLaurent":
        """Parse the canonical text form produced by ``str``.

        >>> QLaurent.parse("q^2 + 2 + q^-2") == QLaurent({2: 1, 0: 2, -2: 1})
        True
        >>> QLaurent.parse("-q") == -QLaurent.monomial(1)
        True
        """
        source = text
        text = text.strip()
        if not text:
            raise ValueError("Cannot parse an empty string as a Laurent polynomial.")
        if text == "0":
            return cls()
        text = text.replace(" - ", " + -").replace(" ", "")
        terms: Dict[int, Fraction] = {}
        for token in text.split("+"):
            negative = token.startswith("-")
            if negative:
                token = token[1:]
            match = cls._TERM.match(token)
            if not token or match is None or (
                match.group("coef") is None and "q" not in token
            ):
                raise ValueError(f"Malformed Laurent polynomial term {token!r} in {source!r}.")
            coefficient = Fraction(match.group("coef") or 1)
            if "q" in token:
                exponent = int(match.group("exp") or 1)
            else:
                exponent = 0
            terms[exponent] = terms.get(exponent, 0) + (-coefficient if negative else coefficient)
        return cls(terms)

    # Dense polynomial views, used by gcd and exact division.

    def _split(self) -> Tuple[int, Coefficients]:
        "Write self as q^shift * P(q) with P a polynomial with non-zero constant term."
        low, high = self.low_degree, self.degree
        return low, [self.coefficient(e) for e in range(low, high + 1)]

    @classmethod
    def _from_dense(cls, shift: int, coefficients: Coefficients) -> "QLaurent":
        return cls({shift + k: c for k, c in enumerate(coefficients)})


ZERO = QLaurent()
ONE = QLaurent.constant(1)
q = QLaurent.monomial(1)


def _trim(coefficients: Coefficients) -> Coefficients:
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients


def _poly_divmod(
    numerator: Coefficients, denominator: Coefficients
) -> Tuple[Coefficients, Coefficients]:
    remainder = _trim(list(numerator))
    denominator = _trim(list(denominator))
    if not denominator:
        raise ZeroDivisionError("Polynomial division by zero.")
    quotient = [Fraction(0)] * max(len(remainder) - len(denominator) + 1, 0)
    lead = denominator[-1]
    while len(remainder) >= len(denominator):
        offset = len(remainder) - len(denominator)
        factor = remainder[-1] / lead
        quotient[offset] = factor
        for k, c in enumerate(denominator):
            remainder[offset + k] -= factor * c
        remainder.pop()
        _trim(remainder)
    return _trim(quotient), remainder


def _poly_gcd(a: Coefficients, b: Coefficients) -> Coefficients:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def gcd(a: QLaurent, b: QLaurent) -> QLaurent:
    """Greatest common divisor up to units c*q^k.

    The result is a monic polynomial with non-zero constant term (1 if a and b are
    coprime, 0 if both are zero).

    >>> print(gcd(QLaurent.parse("q^2 - 1"), QLaurent.parse("q - 1")))
    q - 1
    """
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        _, pa = a._split()
        return QLaurent._from_dense(0, [c / pa[-1] for c in pa])
    _, pa = a._split()
    _, pb = b._split()
    return QLaurent._from_dense(0, _poly_gcd(pa, pb))


def divide_exact(a: QLaurent, b: QLaurent) -> QLaurent:
    """Return a / b, which must be a Laurent polynomial.

    >>> print(divide_exact(QLaurent.parse("q^2 - q^-2"), QLaurent.parse("q - q^-1")))
    q + q^-1

    Raises InternalConsistencyError if the division leaves a remainder."""
    if b.is_zero():
        raise ZeroDivisionError("Exact division by the zero Laurent polynomial.")
    if a.is_zero():
        return ZERO
    shift_a, pa = a._split()
    shift_b, pb = b._split()
    quotient, remainder = _poly_divmod(pa, pb)
    if remainder:
        raise InternalConsistencyError(f"Division of {a} by {b} is not exact.")
    return QLaurent._from_dense(shift_a - shift_b, quotient)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
