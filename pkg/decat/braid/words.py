"""Words in the braid group B_Gamma and in the extended affine braid group.

A word is a sequence of letters T_i^(+-1) and Theta_i^(+-1). The text form separates
letters by whitespace; ``Th`` marks Theta:

>>> word = parse_word("T1 T2^-1 Th1")
>>> word.letters
(T(1), T(2)^-1, Th(1))
>>> print(word.inverse())
Th1^-1 T2 T1^-1

The empty string (or ``1``) is the empty word.

Words act like operators: the rightmost letter acts first, so the word ``T1 T2`` is
the composite T_1 o T_2.
"""

import re
from dataclasses import dataclass
from typing import Optional, Tuple

from decat.core.cartan import CartanData

T = "T"
THETA = "Th"


@dataclass(frozen=True)
class BraidLetter:
    kind: str
    vertex: str
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vertex", str(self.vertex))
        if self.kind not in (T, THETA):
            raise ValueError(f"kind must be '{T}' or '{THETA}', got {self.kind!r}.")
        if self.exponent not in (1, -1):
            raise ValueError(f"Braid letters have exponent 1 or -1, got {self.exponent}.")

    @property
    def is_theta(self) -> bool:
        return self.kind == THETA

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.kind, self.vertex, -self.exponent)

    def __str__(self) -> str:
        return f"{self.kind}{self.vertex}" + ("^-1" if self.exponent == -1 else "")

    def __repr__(self) -> str:
        return f"{self.kind}({self.vertex})" + ("^-1" if self.exponent == -1 else "")


@dataclass(frozen=True)
class BraidWord:
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    @property
    def uses_theta(self) -> bool:
        return any(letter.is_theta for letter in self.letters)

    def validate(self, cd: CartanData) -> "BraidWord":
        "Check that every vertex belongs to the graph (raises UnknownVertexError)."
        for letter in self.letters:
            cd.index(letter.vertex)
        return self

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters) or "1"


def t(vertex, exponent: int = 1) -> BraidLetter:
    return BraidLetter(T, vertex, exponent)


def theta(vertex, exponent: int = 1) -> BraidLetter:
    return BraidLetter(THETA, vertex, exponent)


# "Th" is tried before "T", so a vertex named "h1" cannot be written as "Th1".
_LETTER = re.compile(r"^(Th|T)([A-Za-z0-9_]+?)(?:\^(-?1))?$")


def parse_letter(token: str) -> BraidLetter:
    match = _LETTER.match(token)
    if not match:
        raise ValueError(
            f"Malformed braid letter {token!r}; expected e.g. 'T1', 'T2^-1', 'Th1' or 'Th1^-1'."
        )
    kind, vertex, exponent = match.groups()
    return BraidLetter(kind, vertex, int(exponent) if exponent else 1)


def parse_word(text: str, cd: Optional[CartanData] = None) -> BraidWord:
    "Parse a word; vertices are checked against ``cd`` when it is given."
    tokens = text.split()
    if tokens == ["1"]:
        tokens = []
    word = BraidWord(tuple(parse_letter(token) for token in tokens))
    if cd is not None:
        word.validate(cd)
    return word


if __name__ == "__main__":
    import doctest

    doctest.testmod()
