"""Elements of the fraction field Q(q), kept in a canonical reduced form.

A :class:`QFraction` is stored as numerator/denominator where the two are coprime, the
denominator is a monic polynomial with non-zero constant term, and all powers of q live
in the numerator. The representation is therefore unique, so equality and hashing are
structural:

>>> from decat.qlaurent.laurent import QLaurent
>>> a = QFraction(QLaurent.parse("q^2 - 1"), QLaurent.parse("q^2 - q"))
>>> print(a)
1 + q^-1
>>> a == QLaurent.parse("1 + q^-1")
True
>>> print(QFraction(1, QLaurent.parse("q + q^-1")))
(q)/(q^2 + 1)
"""

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from decat.qlaurent.laurent import QLaurent, _poly_divmod, _poly_gcd

Scalar = Union[int, Fraction, QLaurent, "QFraction"]


class QFraction:
    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator: Scalar = 0, denominator: Scalar = 1):
        if isinstance(numerator, QFraction) or isinstance(denominator, QFraction):
            numerator, denominator = _as_pair(numerator, denominator)
        numerator = QLaurent.coerce(numerator)
        denominator = QLaurent.coerce(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError(f"QFraction with zero denominator ({numerator}/0).")
        self._hash = None
        if numerator.is_zero():
            self.numerator, self.denominator = QLaurent(), QLaurent.constant(1)
            return
        shift_n, pn = numerator._split()
        shift_d, pd = denominator._split()
        common = _poly_gcd(pn, pd)
        if len(common) > 1:
            pn, _ = _poly_divmod(pn, common)
            pd, _ = _poly_divmod(pd, common)
        lead = pd[-1]
        self.numerator = QLaurent._from_dense(shift_n - shift_d, [c / lead for c in pn])
        self.denominator = QLaurent._from_dense(0, [c / lead for c in pd])

    @classmethod
    def coerce(cls, value) -> "QFraction":
        if isinstance(value, QFraction):
            return value
        if isinstance(value, (QLaurent, Rational)):
            return cls(value)
        raise TypeError(f"Cannot convert {value!r} of type {type(value)} to QFraction.")

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_laurent(self) -> bool:
        "True if the denominator is 1, i.e. the value is a Laurent polynomial."
        return self.denominator == 1

    def to_laurent(self) -> QLaurent:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial.")
        return self.numerator

    def inverse(self) -> "QFraction":
        if self.is_zero():
            raise ZeroDivisionError("The zero QFraction has no inverse.")
        return QFraction(self.denominator, self.numerator)

    def bar(self) -> "QFraction":
        "The bar involution q -> q^-1."
        return QFraction(self.numerator.bar(), self.denominator.bar())

    def evaluate(self, value):
        "Substitute q = value (see :meth:`QLaurent.evaluate`)."
        return self.numerator.evaluate(value) / self.denominator.evaluate(value)

    # Arithmetic

    def __add__(self, other) -> "QFraction":
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.denominator == other.denominator:
            return QFraction(self.numerator + other.numerator, self.denominator)
        return QFraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "QFraction":
        return QFraction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "QFraction":
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QFraction":
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QFraction":
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QFraction()
        return QFraction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QFraction":
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QFraction":
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QFraction":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        return QFraction(self.numerator**exponent, self.denominator**exponent)

    # Comparison

    def __eq__(self, other) -> bool:
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_laurent():
                self._hash = hash(self.numerator)
            else:
                self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Text form

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"QFraction('{self}')"

    _FORM = re.compile(r"^\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)$")

    @classmethod
    def parse(cls, text: str) -> "QFraction":
        """Parse the text form produced by ``str``.

        >>> QFraction.parse("(q)/(q^2 + 1)") == QFraction(1, QLaurent.parse("q + q^-1"))
        True
        """
        text = text.strip()
        match = cls._FORM.match(text)
        if match is None:
            return cls(QLaurent.parse(text))
        return cls(QLaurent.parse(match.group("num")), QLaurent.parse(match.group("den")))


def _as_pair(numerator, denominator):
    numerator = QFraction.coerce(numerator)
    denominator = QFraction.coerce(denominator)
    return (
        numerator.numerator * denominator.denominator,
        numerator.denominator * denominator.numerator,
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
