"""JSON reports.

Every report is a plain dict of JSON-compatible values. :func:`dumps_report` serializes
it with sorted keys and a fixed layout, so that identical inputs give byte-identical
files.

>>> check = CheckResult("commutator", "FE - EF = [n] id", True, {"weight": "w=1;v=0"})
>>> print(dumps_report({"checks": [check]}), end="")
{
  "checks": [
    {
      "details": {
        "weight": "w=1;v=0"
      },
      "identity": "FE - EF = [n] id",
      "name": "commutator",
      "passed": true
    }
  ]
}
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np


@dataclass
class CheckResult:
    """The outcome of one verified identity.

    ``details`` holds whatever identifies the instance (weights, vertices, N and k)
    and, for a failure, the counterexample."""

    name: str
    identity: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "identity": self.identity,
            "passed": self.passed,
            "details": self.details,
        }


def all_passed(checks: Sequence[CheckResult]) -> bool:
    return all(check.passed for check in checks)


def first_failure(checks: Sequence[CheckResult]) -> Optional[CheckResult]:
    return next((check for check in checks if not check.passed), None)


def _default(value):
    if isinstance(value, CheckResult):
        return value.to_json()
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (tuple, set, frozenset)):
        return list(value)
    if isinstance(value, Fraction):
        return str(value)
    # QLaurent, QFraction, Weight, ... all have a canonical text form.
    return str(value)


def dumps_report(report: dict) -> str:
    return json.dumps(report, default=_default, sort_keys=True, indent=2) + "\n"


def write_report(report: dict, path: Union[str, Path, None]) -> str:
    "Serialize the report and write it to ``path`` (if given); return the text."
    text = dumps_report(report)
    if path is not None:
        Path(path).write_text(text)
    return text


if __name__ == "__main__":
    import doctest

    doctest.testmod()
