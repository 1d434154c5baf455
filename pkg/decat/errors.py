"""Exceptions raised by decat.

Every exception subclasses the builtin exception a caller would otherwise expect, so
that ``except ValueError`` (and friends) keeps working.
"""


class GraphValidationError(ValueError):
    "The input graph violates the invariants of a simply-laced Dynkin-type graph."


class UnknownVertexError(KeyError):
    "A vertex identifier that is not part of the graph."

    def __str__(self):
        # KeyError quotes its argument; we want a readable message instead.
        return str(self.args[0]) if self.args else ""


class ModuleFormatError(ValueError):
    "A graph or module file could not be parsed."


class TruncatedModuleError(ValueError):
    "The operation needs a complete module, but the module was truncated at a depth."


class UnsupportedGeneratorError(ValueError):
    "A braid generator that has no meaning on the given model (e.g. Theta on a module)."


class InternalConsistencyError(AssertionError):
    """An identity that must hold by construction failed.

    This always signals a bug (or corrupted input data), never a user error."""


class CalibrationError(RuntimeError):
    "No candidate convention passed the calibration self-test."


ERRORS = (
    GraphValidationError,
    UnknownVertexError,
    ModuleFormatError,
    TruncatedModuleError,
    UnsupportedGeneratorError,
    InternalConsistencyError,
    CalibrationError,
)
