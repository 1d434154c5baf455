import json
import threading
import time

import pytest

from decat.util import default_seed, env_int
from decat.util.parallel import default_jobs, ordered_map
from decat.util.reports import CheckResult, all_passed, dumps_report, first_failure, write_report


def test_env_int(monkeypatch):
    monkeypatch.delenv("DECAT_TEST_VALUE", raising=False)
    assert env_int("DECAT_TEST_VALUE", 7) == 7
    monkeypatch.setenv("DECAT_TEST_VALUE", " ")
    assert env_int("DECAT_TEST_VALUE", 7) == 7
    monkeypatch.setenv("DECAT_TEST_VALUE", "12")
    assert env_int("DECAT_TEST_VALUE", 7) == 12
    with pytest.raises(ValueError, match="at least 20"):
        env_int("DECAT_TEST_VALUE", 7, minimum=20)
    monkeypatch.setenv("DECAT_TEST_VALUE", "many")
    with pytest.raises(ValueError, match="DECAT_TEST_VALUE"):
        env_int("DECAT_TEST_VALUE", 7)


def test_defaults_from_environment(monkeypatch):
    monkeypatch.delenv("DECAT_SEED", raising=False)
    monkeypatch.delenv("DECAT_JOBS", raising=False)
    assert default_seed() == 0
    assert default_jobs() == 1
    monkeypatch.setenv("DECAT_SEED", "42")
    monkeypatch.setenv("DECAT_JOBS", "3")
    assert default_seed() == 42
    assert default_jobs() == 3
    monkeypatch.setenv("DECAT_JOBS", "0")
    with pytest.raises(ValueError):
        default_jobs()


def test_ordered_map_keeps_input_order():
    def slow_square(x):
        # Later items finish first.
        time.sleep(0.01 * (5 - x))
        return x * x, threading.current_thread().name

    results = ordered_map(slow_square, range(5), jobs=4)
    assert [value for value, _ in results] == [0, 1, 4, 9, 16]
    assert ordered_map(lambda x: x + 1, [], jobs=4) == []
    assert ordered_map(lambda x: -x, [1, 2], jobs=1) == [-1, -2]


def test_ordered_map_errors():
    with pytest.raises(ValueError):
        ordered_map(abs, [1, 2], jobs=0)

    def fail_on_two(x):
        if x >= 2:
            raise KeyError(x)
        return x

    with pytest.raises(KeyError) as info:
        ordered_map(fail_on_two, [1, 2, 3], jobs=2)
    assert info.value.args == (2,)


def test_check_results():
    passing = CheckResult("divided", "E E^(r) = [r+1] E^(r+1)", True, {"N": 2})
    failing = CheckResult("commutator", "EF - FE = [N-2k] id", False, {"N": 2, "k": 1})
    assert all_passed([]) and all_passed([passing])
    assert not all_passed([passing, failing])
    assert first_failure([passing, failing]) is failing
    assert first_failure([passing]) is None
    assert failing.to_json()["details"] == {"N": 2, "k": 1}


def test_reports_are_canonical(tmp_path):
    from fractions import Fraction

    import numpy as np

    from decat.qlaurent import qint

    report = {
        "z": [CheckResult("a", "x = x", True)],
        "a": {"value": Fraction(1, 2), "count": np.int64(3), "laurent": qint(2), "pair": (1, 2)},
    }
    text = dumps_report(report)
    assert text.index('"a"') < text.index('"z"')
    assert text.endswith("}\n")
    loaded = json.loads(text)
    assert loaded["a"] == {"value": "1/2", "count": 3, "laurent": str(qint(2)), "pair": [1, 2]}
    assert loaded["z"][0]["passed"] is True

    path = tmp_path / "report.json"
    assert write_report(report, path) == text
    assert path.read_text() == text
    assert write_report(report, None) == text
