import pytest

from decat.braid import parse_word
from decat.errors import UnknownVertexError
from decat.ktheory import (
    KTheoryModel,
    calibrated_conventions,
    evaluate_geometric_word,
    rickard_matrix,
)
from decat.ktheory.grassmannian import det_class
from decat.ktheory.kernels import adjoint, is_structural_zero


def _is_identity(backend, matrix):
    return all(
        backend.equal(value, backend.constant(1))
        if i == j
        else is_structural_zero(value) or backend.is_zero(value)
        for i, row in enumerate(matrix)
        for j, value in enumerate(row)
    )


def test_identity_and_theta(backend):
    model = KTheoryModel(3, backend=backend)
    identity = model.identity(1)
    theta = model.theta(1)
    for i, S in enumerate(identity.sources):
        for j, T in enumerate(identity.targets):
            if i != j:
                assert is_structural_zero(identity.rows[i][j])
                assert is_structural_zero(theta.rows[i][j])
        # det(V_i) = det(V) {1} on T*G(1, 3)
        expected = det_class(S, model.variables) * model.convention.shift(model.variables, 1)
        assert backend.equal(theta.rows[i][i] / identity.rows[i][i], expected)
    assert backend.equal(model.euler(0, ()), backend.constant(1))


def test_hecke_supports(evaluation_backend):
    model = KTheoryModel(3)
    e = model.e_kernel(1, 2)
    assert (e.source_k, e.target_k) == (2, 1)
    assert sorted(e.support()) == sorted(
        (S, T) for S in e.sources for T in e.targets if set(T) <= set(S)
    )
    assert len(e.support()) == 6
    f = model.f_kernel(1, 1)
    assert len(f.support()) == 6
    assert all(set(S) <= set(T) for S, T in f.support())
    assert model.e_kernel(1, 2) is e
    assert model.e_kernel(0, 2).name == "id(2)"
    with pytest.raises(ValueError):
        model.e_kernel(3, 2)


def test_composition_with_the_identity(evaluation_backend):
    model = KTheoryModel(3)
    e = model.e_kernel(1, 2)
    assert model.is_zero(model.difference(model.compose(model.identity(1), e), e))
    assert model.is_zero(model.difference(model.compose(e, model.identity(2)), e))
    with pytest.raises(ValueError):
        model.compose(e, e)


def test_ef_on_a_point(backend):
    # On T*G(0, 2) = point, EF acts by [2] at q = t
    model = KTheoryModel(2, backend=backend)
    t = model.variables.t
    ef = model.compose(model.e_kernel(1, 1), model.f_kernel(1, 0))
    assert (ef.source_k, ef.target_k) == (0, 0)
    assert backend.equal(ef.rows[0][0], t + 1 / t)


def test_operators_act_on_row_vectors(evaluation_backend):
    model = KTheoryModel(2)
    unit = [evaluation_backend.constant(1)]
    image = model.apply(model.f_kernel(1, 0), unit)
    assert len(image) == 2
    assert not any(evaluation_backend.is_zero(value) for value in image)
    # The identity kernel induces the identity map
    vector = [evaluation_backend.constant(2), evaluation_backend.constant(3)]
    same = model.apply(model.identity(1), vector)
    assert all(evaluation_backend.equal(a, b) for a, b in zip(same, vector))
    with pytest.raises(ValueError):
        model.apply(model.identity(1), unit)


def test_combinations(evaluation_backend):
    model = KTheoryModel(2)
    e = model.e_kernel(1, 1)
    assert model.is_zero(model.combine([(2, e), (-1, e), (-1, e)], "zero"))
    assert model.first_nonzero(model.combine([(1, e)], "e"))["target"] == "{}"
    with pytest.raises(ValueError):
        model.combine([], "empty")
    with pytest.raises(ValueError):
        model.combine([(1, e), (1, model.identity(1))], "mixed")


def test_dual_model(evaluation_backend):
    model = KTheoryModel(2)
    dual = model.dual()
    assert dual.is_dual
    assert dual.dual() is model
    assert evaluation_backend.equal(dual.variables.t * model.variables.t, evaluation_backend.constant(1))


def test_adjoint_shapes(evaluation_backend):
    model = KTheoryModel(3)
    right = adjoint(model, lambda m: m.e_kernel(1, 2), "right")
    assert (right.source_k, right.target_k) == (1, 2)
    assert len(right.rows) == 3 and len(right.rows[0]) == 3
    with pytest.raises(ValueError):
        adjoint(model, lambda m: m.e_kernel(1, 2), "up")


def test_invalid_models():
    with pytest.raises(ValueError):
        KTheoryModel(-1)


def test_geometric_words(evaluation_backend):
    conventions = calibrated_conventions(evaluation_backend)
    rule = conventions.rule
    model = KTheoryModel(3, conventions.tangent)
    identity = evaluate_geometric_word(parse_word(""), model, 1, rule)
    assert (identity.source_k, identity.target_k) == (1, 1)
    assert _is_identity(evaluation_backend, identity.matrix)

    theta = evaluate_geometric_word(parse_word("Th1 Th1^-1"), model, 2, rule)
    assert _is_identity(evaluation_backend, theta.matrix)

    braid = evaluate_geometric_word(parse_word("T1"), model, 1, rule)
    assert (braid.source_k, braid.target_k) == (1, 2)

    round_trip = evaluate_geometric_word(parse_word("T1 T1^-1"), model, 1, rule)
    assert round_trip.target_k == 1
    assert _is_identity(evaluation_backend, round_trip.matrix)


def test_geometric_word_errors(evaluation_backend):
    rule = calibrated_conventions(evaluation_backend).rule
    model = KTheoryModel(2)
    with pytest.raises(UnknownVertexError):
        evaluate_geometric_word(parse_word("T2"), model, 1, rule)
    with pytest.raises(ValueError):
        evaluate_geometric_word(parse_word("T1"), model, 3, rule)
    with pytest.raises(ValueError):
        rickard_matrix(model, 1, rule, power=2)

