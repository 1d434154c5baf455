import pytest
from assertions import assert_matrix_equal

from decat.core.cartan import GraphData, Weight, build_cartan, pair
from decat.errors import UnknownVertexError
from decat.qlaurent import linalg, qint
from decat.rep import build_module
from decat.udot import UdotTerm, a, descent, e, evaluate, evaluate_block, f

SL2 = build_cartan(GraphData(("1",)))
A2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))


@pytest.mark.parametrize("w", [1, 2, 3])
def test_commutator_acts_by_quantum_integers(w):
    module = build_module(SL2, (w,))
    commutator = [UdotTerm.of(f(1), e(1)), UdotTerm.of(e(1), f(1), scalar=-1)]
    blocks = evaluate(commutator, module)
    assert list(blocks) == module.weights
    for weight, block in blocks.items():
        assert block.target == weight
        n = pair(SL2, weight, 0)
        expected = linalg.scale(linalg.identity(module.dim(weight)), qint(n))
        assert_matrix_equal(block.matrix, expected)


def test_idempotents_select_a_weight():
    module = build_module(SL2, (2,))
    middle = Weight((2,), (1,))
    blocks = evaluate(UdotTerm.of(e(1), a(middle)), module)
    assert blocks[middle].target == Weight((2,), (0,))
    assert not linalg.is_zero(blocks[middle].matrix)
    top = module.highest_weight
    assert linalg.is_zero(blocks[top].matrix)
    assert blocks[top].matrix.shape == (0, 1)


def test_terms_must_be_weight_homogeneous():
    module = build_module(SL2, (2,))
    with pytest.raises(ValueError, match="homogeneous"):
        evaluate_block([UdotTerm.of(e(1)), UdotTerm.of(f(1))], module, Weight((2,), (1,)))


def test_empty_sum_is_zero():
    module = build_module(A2, (1, 1))
    weight = Weight((1, 1), (1, 1))
    block = evaluate_block([], module, weight)
    assert block.matrix.shape == (2, 2)
    assert linalg.is_zero(block.matrix)


def test_cartan_data_must_match():
    module = build_module(SL2, (1,))
    with pytest.raises(ValueError):
        evaluate(UdotTerm.of(e(1)), module, cartan=A2)


def test_terms_are_checked_against_the_module():
    module = build_module(SL2, (1,))
    with pytest.raises(UnknownVertexError):
        evaluate(UdotTerm.of(e(2)), module)
    with pytest.raises(UnknownVertexError):
        evaluate_block([UdotTerm.of(f(1)), UdotTerm.of(f(3))], module, module.highest_weight)
    with pytest.raises(ValueError, match="rank 1"):
        evaluate(UdotTerm.of(e(1), a(Weight((1, 0), (0, 0)))), module)


def test_descent():
    assert descent(UdotTerm.of(e(1), f(1), f(1)), SL2) == 2
    assert descent(UdotTerm.of(f(1), e(1)), SL2) == 0
    assert descent(UdotTerm.of(f(2, 3), f(1)), A2) == 4
