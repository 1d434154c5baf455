"""Terms of the modified quantum group and their evaluation on modules.

decat never rewrites U-dot terms into a normal form. Two terms are considered equal
when they act by the same matrices on the modules built by :mod:`decat.rep`, so the
only operations here are idempotent bookkeeping (:mod:`decat.udot.terms`) and
evaluation (:mod:`decat.udot.evaluate`).
"""

from decat.udot.evaluate import Block, descent, evaluate, evaluate_block
from decat.udot.terms import (
    Generator,
    Idempotent,
    NormalizedTerm,
    UdotTerm,
    a,
    e,
    f,
    normalize_idempotents,
    parse_combination,
    parse_letter,
    parse_term,
)

__all__ = [
    "Block",
    "descent",
    "evaluate",
    "evaluate_block",
    "Generator",
    "Idempotent",
    "NormalizedTerm",
    "UdotTerm",
    "a",
    "e",
    "f",
    "normalize_idempotents",
    "parse_combination",
    "parse_letter",
    "parse_term",
]
