"""The braid group action on integrable modules.

:mod:`decat.braid.words` parses braid words, :mod:`decat.braid.operators` evaluates
them on modules built by :mod:`decat.rep`, and :mod:`decat.braid.calibration` fixes the
q-powers of the Rickard sum by checking the braid relations.
"""

from decat.braid.calibration import (
    CalibrationResult,
    braid_relation,
    calibrate_convention,
    candidate_rules,
    verify_braid,
)
from decat.braid.operators import (
    ExponentRule,
    OperatorCache,
    WeightOperator,
    evaluate_word,
    rickard_operator,
)
from decat.braid.words import BraidLetter, BraidWord, parse_word, t, theta

__all__ = [
    "CalibrationResult",
    "braid_relation",
    "calibrate_convention",
    "candidate_rules",
    "verify_braid",
    "ExponentRule",
    "OperatorCache",
    "WeightOperator",
    "evaluate_word",
    "rickard_operator",
    "BraidLetter",
    "BraidWord",
    "parse_word",
    "t",
    "theta",
]
