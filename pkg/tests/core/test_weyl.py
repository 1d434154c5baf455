import pytest

from decat.core.cartan import GraphData, Weight, build_cartan
from decat.core.weyl import height, is_finite_type, lowest_weight, positive_roots, weyl_dimension

A1 = build_cartan(GraphData(("1",), ()))
A2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))
A3 = build_cartan(GraphData(("1", "2", "3"), (("1", "2"), ("2", "3"))))
TRIANGLE = build_cartan(GraphData(("1", "2", "3"), (("1", "2"), ("2", "3"), ("3", "1"))))


def test_finite_type():
    assert is_finite_type(A1)
    assert is_finite_type(A3)
    assert not is_finite_type(TRIANGLE)


def test_positive_roots():
    assert len(positive_roots(A2)) == 3
    assert len(positive_roots(A3)) == 6
    assert (1, 1) in positive_roots(A2)


@pytest.mark.parametrize(
    "cd, w, dim",
    [
        (A1, (3,), 4),
        (A2, (1, 0), 3),
        (A2, (1, 1), 8),
        (A2, (2, 0), 6),
        (A3, (1, 0, 0), 4),
        (A3, (0, 1, 0), 6),
    ],
)
def test_weyl_dimension(cd, w, dim):
    assert weyl_dimension(cd, w) == dim


def test_lowest_weight():
    assert lowest_weight(A1, (2,)) == Weight((2,), (2,))
    assert lowest_weight(A2, (1, 1)) == Weight((1, 1), (2, 2))
    assert height(A2, (1, 0)) == 2


def test_weyl_dimension_needs_finite_type():
    with pytest.raises(ValueError):
        weyl_dimension(TRIANGLE, (1, 0, 0))
