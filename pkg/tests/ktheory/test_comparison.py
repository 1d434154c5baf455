from decat.ktheory.comparison import (
    SHIFT_FORMS,
    Monomial,
    ShiftForm,
    compare_uniform,
    match_monomial,
    search_bounds,
    transpose,
)


def test_match_monomial(backend):
    variables = backend.variables(2)
    x1, x2 = variables.x
    t = variables.t
    value = -(t**3) / (x1 * x2)
    assert match_monomial(value, variables, 5, 2) == Monomial(-1, 3, -1)
    assert match_monomial(backend.constant(1), variables, 5, 2) == Monomial(1, 0, 0)
    assert match_monomial(2 * t, variables, 5, 2) is None
    assert match_monomial(t**6, variables, 5, 2) is None
    assert match_monomial(x1 * t, variables, 5, 2) is None
    assert match_monomial(0, variables, 5, 2) is None


def test_monomial_values(evaluation_backend):
    variables = evaluation_backend.variables(3)
    monomial = Monomial(-1, 2, 1)
    x1, x2, x3 = variables.x
    assert evaluation_backend.equal(monomial.value(variables), -(variables.t**2) * x1 * x2 * x3)
    assert str(monomial) == "-t^2 det^1"
    assert str(Monomial(1, 0)) == "1"
    assert monomial.to_json() == {"sign": -1, "t_exponent": 2, "det_exponent": 1}


def test_compare_uniform(evaluation_backend):
    variables = evaluation_backend.variables(2)
    x1, x2 = variables.x
    t = variables.t
    rhs = [[x1, 0], [x1 + x2, t]]
    lhs = [[-t * x1, 0], [-t * (x1 + x2), -t * t]]
    comparison = compare_uniform(lhs, rhs, variables)
    assert comparison.passed
    assert comparison.monomial == Monomial(-1, 1, 0)
    assert comparison.details(evaluation_backend)["ratio"] == "-t^1"

    scaled = compare_uniform([[2 * x1, 0], [2 * (x1 + x2), 2 * t]], rhs, variables)
    assert scaled.uniform and not scaled.passed

    broken = compare_uniform([[x1, 0], [x1 + x2, x1]], rhs, variables)
    assert not broken.uniform
    assert broken.counterexample == (1, 1)

    support = compare_uniform([[x1, x2], [x1 + x2, t]], rhs, variables)
    assert not support.uniform
    assert support.counterexample == (0, 1)

    assert not compare_uniform([[x1]], rhs, variables).uniform
    both_zero = compare_uniform([[0, 0]], [[0, evaluation_backend.constant(0)]], variables)
    assert both_zero.uniform and both_zero.ratio is None


def test_helpers():
    assert transpose([[1, 2, 3], [4, 5, 6]]) == [[1, 4], [2, 5], [3, 6]]
    assert transpose([]) == []
    assert search_bounds(3) == (26, 8)


def test_shift_forms():
    form = ShiftForm(sigma=-1)
    assert form.monomial(3) == Monomial(1, -3)
    assert form.matches(Monomial(1, -3), 3)
    assert not form.matches(Monomial(1, 3), 3)
    assert not form.matches(Monomial(1, -3, -1), 3)
    assert not form.matches(None, 3)
    signed = ShiftForm(sigma=1, beta=-1, alpha=-1)
    assert [signed.monomial(m) for m in (0, 1, 2)] == [Monomial(-1, 0), Monomial(1, 1), Monomial(-1, 2)]
    assert str(signed) == "-(-t)^m"
    assert signed.to_json() == {"form": "-(-t)^m", "sigma": 1, "beta": -1, "alpha": -1}
    assert len(set(SHIFT_FORMS)) == 8
    assert SHIFT_FORMS[0] == ShiftForm(sigma=-1)


def test_holds_with(evaluation_backend):
    variables = evaluation_backend.variables(2)
    x1, x2 = variables.x
    t = variables.t
    rhs = [[x1, 0], [x2, t]]
    lhs = [[t * x1, 0], [t * x2, t * t]]
    comparison = compare_uniform(lhs, rhs, variables)
    assert comparison.holds_with(Monomial(1, 1))
    assert not comparison.holds_with(Monomial(-1, 1))
    assert not comparison.holds_with(Monomial(1, 0))
    assert compare_uniform([[0]], [[0]], variables).holds_with(Monomial(1, 5))
    assert not compare_uniform([[x1]], [[x2]], variables).holds_with(Monomial(1, 0))
