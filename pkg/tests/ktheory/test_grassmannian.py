import pytest

from decat.ktheory.grassmannian import (
    Character,
    TangentConvention,
    complement,
    correspondence_weights,
    fixed_point_label,
    fixed_points,
    tangent_weights,
)


def test_fixed_points():
    assert fixed_points(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert fixed_points(4, 0) == [()]
    assert len(fixed_points(5, 2)) == 10
    assert fixed_point_label((0, 2)) == "{1,3}"
    assert fixed_point_label(()) == "{}"
    assert complement(4, (1, 3)) == (0, 2)
    with pytest.raises(ValueError):
        fixed_points(2, 3)


@pytest.mark.parametrize("N, k", [(1, 0), (2, 1), (3, 1), (4, 2), (5, 3)])
def test_tangent_weights(N, k):
    for S in fixed_points(N, k):
        weights = tangent_weights(N, k, S)
        assert len(weights) == 2 * k * (N - k)
        base, fibre = weights[: k * (N - k)], weights[k * (N - k) :]
        # The fibre is dual to the base up to t^2
        assert sorted(tuple(-a for a in w.x) for w in base) == sorted(w.x for w in fibre)
        assert {w.t for w in fibre} <= {2}
        assert {w.t for w in base} <= {0}


def test_tangent_weight_text():
    assert [str(w) for w in tangent_weights(2, 1, (0,))] == ["x2/x1", "x1/x2 t^2"]
    assert [str(w) for w in tangent_weights(2, 1, (1,), fibre=-2)] == ["x1/x2", "x2/x1 t^-2"]
    assert str(Character((2, 0, -1), 1)) == "x1^2/x3 t^1"
    assert str(Character((0, 0))) == "1"


def test_invalid_fixed_points():
    with pytest.raises(ValueError):
        tangent_weights(3, 2, (0,))
    with pytest.raises(ValueError):
        tangent_weights(3, 2, (0, 0))
    with pytest.raises(ValueError):
        tangent_weights(3, 1, (3,))


def test_correspondence_dimension():
    # The Hecke correspondence is Lagrangian: half the dimension of the product
    N = 4
    for big_k, small_k in [(2, 1), (3, 1), (2, 0), (4, 2)]:
        big = tuple(range(big_k))
        small = tuple(range(small_k))
        weights = correspondence_weights(N, big, small)
        product = 2 * big_k * (N - big_k) + 2 * small_k * (N - small_k)
        assert 2 * len(weights) == product
    with pytest.raises(ValueError):
        correspondence_weights(3, (0,), (1,))


def test_tangent_conventions(evaluation_backend):
    variables = evaluation_backend.variables(2)
    t = variables.t
    convention = TangentConvention(2, -1, 1)
    assert evaluation_backend.equal(convention.shift(variables), -t)
    assert evaluation_backend.equal(convention.shift(variables, 2), t**2)
    assert evaluation_backend.equal(convention.shift(variables, -1), -1 / t)
    assert convention.shift_label == "-t"
    assert TangentConvention(2, 1, -1).shift_label == "t^-1"
    assert convention.to_json() == {"fibre_t_exponent": 2, "shift": "-t"}
