"""Exact arithmetic in Q[q, q^-1] and Q(q), plus quantum combinatorics.

Everything in decat that depends on the quantum parameter is carried by
:class:`~decat.qlaurent.laurent.QLaurent` (Laurent polynomials) and
:class:`~decat.qlaurent.fraction.QFraction` (their fraction field). No floating point
is used anywhere.

In the Grothendieck group an equivariant shift {1} acts as multiplication by q and a
homological shift [1] as multiplication by -1, so that the cohomology of P^n
decategorifies to the quantum integer [n+1] (see
:func:`~decat.qlaurent.quantum.cohomology_class`).
"""

from decat.qlaurent.fraction import QFraction
from decat.qlaurent.laurent import ONE, ZERO, QLaurent, divide_exact, gcd, q
from decat.qlaurent.quantum import cohomology_class, qbinom, qfactorial, qint

__all__ = [
    "QLaurent",
    "QFraction",
    "ONE",
    "ZERO",
    "q",
    "gcd",
    "divide_exact",
    "qint",
    "qfactorial",
    "qbinom",
    "cohomology_class",
]
