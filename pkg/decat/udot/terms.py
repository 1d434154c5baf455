"""Weighted words in the modified quantum group U_q(g)-dot.

A :class:`UdotTerm` is a scalar times a word of letters, each letter being a divided
power E(i, r) = e_i^(r), F(i, r) = f_i^(r) or a weight idempotent A(lambda). Words are
read like operators: the rightmost letter acts first.

Terms have a text form, used by the command line:

>>> term = parse_term("E1^(2) F2 a[w=1,0;v=0,0]")
>>> term.word
(E(1, 2), F(2, 1), A(w=1,0;v=0,0))
>>> print(term)
E1^(2) F2 a[w=1,0;v=0,0]

There is no normal form for terms. The only rewriting done here is the bookkeeping of
idempotents: ``a_lambda a_mu = delta a_lambda`` and ``e_i a_lambda = a_(lambda+alpha_i)
e_i``, which :func:`normalize_idempotents` uses to move every idempotent to the right
end of the word and annotate each letter with the weights it maps between. Equality of
terms is decided by evaluating them on modules (:mod:`decat.udot.evaluate`).
"""

import re
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from decat.core.cartan import CartanData, Weight
from decat.qlaurent.laurent import ONE, QLaurent

E = "E"
F = "F"


@dataclass(frozen=True)
class Generator:
    "The divided power e_i^(r) (direction E) or f_i^(r) (direction F)."

    direction: str
    vertex: str
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vertex", str(self.vertex))
        if self.direction not in (E, F):
            raise ValueError(f"direction must be '{E}' or '{F}', got {self.direction!r}.")
        if self.power < 1:
            raise ValueError(f"Divided powers need r >= 1, got {self.power}.")

    def root_shift(self, cd: CartanData) -> Tuple[int, ...]:
        "The change of the v-coordinates of a weight when this letter is applied."
        k = cd.index(self.vertex)
        sign = -1 if self.direction == E else 1
        return tuple(sign * self.power * int(j == k) for j in range(cd.rank))

    def __str__(self) -> str:
        suffix = f"^({self.power})" if self.power != 1 else ""
        return f"{self.direction}{self.vertex}{suffix}"

    def __repr__(self) -> str:
        return f"{self.direction}({self.vertex}, {self.power})"


@dataclass(frozen=True)
class Idempotent:
    "The weight idempotent a_lambda."

    weight: Weight

    def __str__(self) -> str:
        return f"a[{self.weight}]"

    def __repr__(self) -> str:
        return f"A({self.weight})"


Letter = Union[Generator, Idempotent]


def e(vertex, r: int = 1) -> Generator:
    return Generator(E, vertex, r)


def f(vertex, r: int = 1) -> Generator:
    return Generator(F, vertex, r)


def a(weight: Weight) -> Idempotent:
    return Idempotent(weight)


@dataclass(frozen=True)
class UdotTerm:
    scalar: QLaurent
    word: Tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "scalar", QLaurent.coerce(self.scalar))
        object.__setattr__(self, "word", tuple(self.word))

    @classmethod
    def of(cls, *letters: Letter, scalar=ONE) -> "UdotTerm":
        return cls(scalar, letters)

    def __mul__(self, other: "UdotTerm") -> "UdotTerm":
        "Concatenation: (s w) * (s' w') = (s s') (w w')."
        if not isinstance(other, UdotTerm):
            return NotImplemented
        return UdotTerm(self.scalar * other.scalar, self.word + other.word)

    def scaled(self, factor) -> "UdotTerm":
        return UdotTerm(self.scalar * QLaurent.coerce(factor), self.word)

    def __neg__(self) -> "UdotTerm":
        return self.scaled(-1)

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return tuple(letter for letter in self.word if isinstance(letter, Generator))

    def __str__(self) -> str:
        word = " ".join(str(letter) for letter in self.word) or "1"
        if self.scalar == ONE:
            return word
        return f"({self.scalar}) {word}"


class FlowStep(NamedTuple):
    letter: Generator
    source: Weight
    target: Weight


@dataclass(frozen=True)
class NormalizedTerm:
    """A term with every idempotent moved to the right end.

    ``source`` is the weight of the rightmost idempotent (None if the word had none) and
    ``flow`` annotates each generator, in the order they act, with its source and
    target weight."""

    term: UdotTerm
    source: Optional[Weight]
    flow: Tuple[FlowStep, ...]

    @property
    def target(self) -> Optional[Weight]:
        if self.source is None:
            return None
        return self.flow[-1].target if self.flow else self.source


def normalize_idempotents(term: UdotTerm, cd: CartanData) -> Optional[NormalizedTerm]:
    """Push every idempotent to the right end of the word, or return None if the term is
    zero because two idempotents disagree about the weight.

    >>> from decat.core.cartan import GraphData, build_cartan
    >>> sl2 = build_cartan(GraphData(("1",)))
    >>> lam = Weight((2,), (1,))
    >>> print(normalize_idempotents(UdotTerm.of(e(1), a(lam)), sl2).term)
    E1 a[w=2;v=1]
    >>> print(normalize_idempotents(UdotTerm.of(a(lam.plus_root(0)), e(1)), sl2).term)
    E1 a[w=2;v=1]
    >>> normalize_idempotents(UdotTerm.of(a(lam), a(lam.plus_root(0))), sl2) is None
    True
    """
    # offsets[p] is the total root shift of the letters to the right of position p.
    offsets: List[Tuple[int, ...]] = [()] * len(term.word)
    running = (0,) * cd.rank
    for position in reversed(range(len(term.word))):
        offsets[position] = running
        letter = term.word[position]
        if isinstance(letter, Generator):
            shift = letter.root_shift(cd)
            running = tuple(x + y for x, y in zip(running, shift))

    source = None
    for position, letter in enumerate(term.word):
        if not isinstance(letter, Idempotent):
            continue
        if len(letter.weight.w) != cd.rank:
            raise ValueError(f"Idempotent {letter} does not match a graph of rank {cd.rank}.")
        implied = letter.weight.shifted(tuple(-x for x in offsets[position]))
        if source is None:
            source = implied
        elif implied != source:
            return None

    generators = term.generators
    flow = []
    if source is not None:
        current = source
        for letter in reversed(generators):
            target = current.shifted(letter.root_shift(cd))
            flow.append(FlowStep(letter, current, target))
            current = target
    word = generators + ((Idempotent(source),) if source is not None else ())
    return NormalizedTerm(UdotTerm(term.scalar, word), source, tuple(flow))


_GENERATOR = re.compile(r"^([EF])([A-Za-z0-9_]+)(?:\^\((\d+)\))?$")
_IDEMPOTENT = re.compile(r"^a\[(.*)\]$")


def parse_letter(token: str) -> Letter:
    match = _GENERATOR.match(token)
    if match:
        direction, vertex, power = match.groups()
        return Generator(direction, vertex, int(power) if power else 1)
    match = _IDEMPOTENT.match(token)
    if match:
        return Idempotent(Weight.parse(match.group(1)))
    raise ValueError(
        f"Malformed letter {token!r}; expected e.g. 'E1', 'F2^(3)' or 'a[w=1,0;v=0,0]'."
    )


def parse_term(text: str, scalar=ONE) -> UdotTerm:
    "Parse a space-separated word of letters (see the module docstring)."
    return UdotTerm(scalar, tuple(parse_letter(token) for token in text.split()))


def parse_combination(text: str) -> List[UdotTerm]:
    """Parse a signed sum of words, e.g. ``"F1 E1 a[w=1;v=0] - E1 F1 a[w=1;v=0]"``.

    >>> [str(t) for t in parse_combination("E1 F1 - F1 E1")]
    ['E1 F1', '(-1) F1 E1']
    """
    terms = []
    sign = 1
    letters: List[Letter] = []
    for position, token in enumerate(text.split()):
        if token in ("+", "-"):
            if not letters and (terms or position > 0 or token == "+"):
                raise ValueError(f"Malformed combination {text!r}: misplaced {token!r}.")
            if letters:
                terms.append(UdotTerm(QLaurent.constant(sign), tuple(letters)))
                letters = []
            sign = 1 if token == "+" else -1
        else:
            letters.append(parse_letter(token))
    if not letters:
        raise ValueError(f"Malformed combination {text!r}: expected a word at the end.")
    terms.append(UdotTerm(QLaurent.constant(sign), tuple(letters)))
    return terms


def terms_text(terms: Sequence[UdotTerm]) -> str:
    return " + ".join(str(t) for t in terms)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
