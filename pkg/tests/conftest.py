import os
import sys

# Add helper functions to path
sys.path.append(os.path.join(os.path.dirname(__file__), "decat_test_helpers"))

import pytest

from decat.fieldmath import backend_manager

backends = ["evaluation", "symbolic"]


@pytest.fixture(params=backends)
def backend(request):
    """A fixture that provides each fieldmath backend in turn, as the active backend.

    Usage:
    def my_test(backend: Backend):
        x1, x2 = backend.variables(2).x
        assert backend.equal(x1 * x2 / x1, x2)
    """
    with backend_manager.using_backend(request.param) as active:
        yield active


@pytest.fixture
def evaluation_backend():
    with backend_manager.using_backend("evaluation") as active:
        yield active
