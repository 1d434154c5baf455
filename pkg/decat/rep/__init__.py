"""Integrable highest-weight modules V(Lambda_w) with exact generator matrices.

:func:`~decat.rep.builder.build_module` constructs the module,
:func:`~decat.rep.freudenthal.freudenthal_character` is an independent oracle for its
character, and :mod:`decat.rep.serialization` reads and writes module files. The
relation suite lives in :mod:`decat.rep.relations`.
"""

from decat.rep.builder import build_module
from decat.rep.freudenthal import freudenthal_character
from decat.rep.module import IntegrableModule
from decat.rep.serialization import load_module, save_module

__all__ = [
    "IntegrableModule",
    "build_module",
    "freudenthal_character",
    "load_module",
    "save_module",
]
