from fractions import Fraction

import pytest

from decat.errors import InternalConsistencyError
from decat.fieldmath import Backend, backend_manager, register_backend
from decat.fieldmath.included_backends.evaluation_backend import EvaluationBackend


def test_arithmetic(backend: Backend):
    variables = backend.variables(2)
    x1, x2 = variables.x
    t = variables.t
    assert backend.equal(x1 * x2 / x1, x2)
    assert backend.equal((x1 - t) * (x1 + t), x1**2 - t**2)
    assert not backend.is_zero(x1 - x2)
    assert not backend.is_zero(1 - x1 * t)
    assert backend.is_zero(x1 / t - x1 * t**-1)


def test_constants(backend: Backend):
    x1, x2 = backend.variables(2).x
    assert backend.as_constant(backend.constant(Fraction(3, 2))) == Fraction(3, 2)
    assert backend.as_constant((x1 + x2) / (2 * x2 + 2 * x1)) == Fraction(1, 2)
    assert backend.as_constant(x1 / x2) is None


def test_monomials_and_duals(backend: Backend):
    variables = backend.variables(2)
    x1, x2 = variables.x
    t = variables.t
    assert backend.equal(variables.monomial((1, -2), 3), x1 * t**3 / x2**2)
    dual = variables.dual()
    assert backend.equal(dual.x[0] * x1, backend.constant(1))
    assert backend.equal(dual.monomial((1, 0), 1), 1 / (x1 * t))


def test_inverse_matrix(backend: Backend):
    variables = backend.variables(1)
    (x,) = variables.x
    t = variables.t
    rows = [[x, backend.constant(1)], [backend.constant(0), t]]
    inverse = backend.inverse_matrix(rows)
    assert backend.equal(inverse[0][0], 1 / x)
    assert backend.equal(inverse[0][1], -1 / (x * t))
    assert backend.is_zero(inverse[1][0])
    assert backend.equal(inverse[1][1], 1 / t)
    with pytest.raises(InternalConsistencyError):
        backend.inverse_matrix([[x, t], [x * x, x * t]])


def test_render_is_deterministic(backend: Backend):
    x1, x2 = backend.variables(2).x
    assert backend.render(x1 * x2) == backend.render(x2 * x1)
    assert backend.describe(2)["backend"] == backend.name


def test_evaluation_points_are_reproducible():
    a = EvaluationBackend(seed=3)
    b = EvaluationBackend(seed=3)
    c = EvaluationBackend(seed=4)
    assert a.points(3) == b.points(3)
    assert a.points(3) != c.points(3)
    assert len(a.points(3)) == a.num_points
    for point in a.points(3):
        x, t = point[:-1], point[-1]
        assert len(set(x)) == len(x)
        assert t != 1
    assert len(a.describe(3)["points"]) == a.num_points


def test_evaluation_backend_errors():
    with pytest.raises(ValueError):
        EvaluationBackend(num_points=4)
    with pytest.raises(ValueError):
        EvaluationBackend().points(30)


def test_backend_manager():
    before = backend_manager.active_backend
    with backend_manager.using_backend("symbolic") as symbolic:
        assert symbolic.name == "symbolic"
        assert backend_manager.active_backend is symbolic
    assert backend_manager.active_backend is before
    with backend_manager.using_backend("evaluation", seed=5) as evaluation:
        assert evaluation.seed == 5
    with pytest.raises(ValueError):
        with backend_manager.using_backend("does-not-exist"):
            pass
    assert backend_manager.active_backend is before


def test_register_backend_names_are_unique():
    with pytest.raises(ValueError):
        register_backend("evaluation", EvaluationBackend)
