from typing import Sequence

from decat.qlaurent import linalg
from decat.util.reports import CheckResult, first_failure


def assert_matrix_equal(a, b):
    "Exact equality of QFraction matrices, showing both in the failure message."
    assert a.shape == b.shape, f"shapes differ: {a.shape} != {b.shape}"
    assert linalg.equal(a, b), f"{linalg.to_text(a)} != {linalg.to_text(b)}"


def assert_all_passed(results: Sequence[CheckResult]):
    assert results, "no checks were run"
    failure = first_failure(results)
    assert failure is None, f"{failure.name} failed: {failure.details}"
