"""Quantum integers, factorials and binomials.

>>> print(qint(3))
q^2 + 1 + q^-2
>>> print(qbinom(4, 2))
q^4 + q^2 + 2 + q^-2 + q^-4
>>> print(cohomology_class(1))
q + q^-1
"""

from functools import lru_cache

from decat.qlaurent.laurent import ONE, ZERO, QLaurent, divide_exact


@lru_cache(maxsize=None)
def qint(n: int) -> QLaurent:
    "The quantum integer [n] = (q^n - q^-n) / (q - q^-1)."
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return QLaurent({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> QLaurent:
    "[n]! = [1][2]...[n], with [0]! = 1."
    if n < 0:
        raise ValueError(f"The quantum factorial is only defined for n >= 0, got {n}.")
    result = ONE
    for k in range(1, n + 1):
        result = result * qint(k)
    return result


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QLaurent:
    "The quantum binomial [n]! / ([k]! [n-k]!), computed by exact division."
    if k < 0 or k > n:
        raise ValueError(f"qbinom requires 0 <= k <= n, got n={n}, k={k}.")
    return divide_exact(qfactorial(n), qfactorial(k) * qfactorial(n - k))


def cohomology_class(n: int) -> QLaurent:
    """The Grothendieck-group class of the symmetrically bigraded cohomology of P^n.

    H(P^n) is a sum of one-dimensional pieces shifted by [-n+2k]{n-2k} for k = 0..n.
    With {1} acting as q and [1] as -1, and the overall sign (-1)^n of the
    symmetric bigrading dropped, each piece contributes q^(n-2k). The empty projective
    space (n = -1) has class 0.
    """
    if n < -1:
        raise ValueError(f"Projective space of dimension {n} does not exist (n >= -1).")
    total = ZERO
    for k in range(n + 1):
        homological = -n + 2 * k
        sign = (-1) ** (homological + n)  # Always +1 once (-1)^n is factored out.
        total = total + QLaurent.monomial(-homological, sign)
    return total


if __name__ == "__main__":
    import doctest

    doctest.testmod()
