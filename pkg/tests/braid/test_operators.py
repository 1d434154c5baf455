import pytest
from assertions import assert_all_passed

from decat.braid import (
    ExponentRule,
    OperatorCache,
    WeightOperator,
    calibrate_convention,
    candidate_rules,
    evaluate_word,
    parse_word,
    rickard_operator,
    verify_braid,
)
from decat.core.cartan import GraphData, Weight, build_cartan, reflect
from decat.errors import TruncatedModuleError, UnsupportedGeneratorError
from decat.qlaurent import q
from decat.rep import build_module

SL2 = build_cartan(GraphData(("1",)))
A1xA1 = build_cartan(GraphData(("1", "2")))
A2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))

RULE = ExponentRule(1, 0, -1)


def test_exponent_rules():
    assert RULE.coefficient(2, n=0) == q**2
    assert RULE.coefficient(0, n=5) == 1
    assert ExponentRule(0, 1, 1).coefficient(1, n=-1) == -1
    assert ExponentRule(-1, 1, 1).exponent(2, n=1) == 4
    assert str(RULE) == "a=1,b=0,epsilon=-1"
    with pytest.raises(ValueError):
        ExponentRule(0, 0, 0)


def test_candidate_order():
    rules = candidate_rules()
    assert len(rules) == 30
    assert rules[0] == ExponentRule(0, 0, 1)
    assert rules[1] == ExponentRule(0, 0, -1)
    assert len(set(rules)) == len(rules)


def test_calibration():
    result = calibrate_convention()
    assert result.rule == RULE
    assert result.modules == ["w=1,0;v=0,0", "w=1,1;v=0,0"]
    assert all("first_failure" in entry for entry in result.rejected)
    assert result.to_json()["rule"]["a"] == 1


def test_rickard_operator_on_the_standard_representation():
    module = build_module(SL2, (1,))
    operator = rickard_operator(module, "1", RULE)
    top, bottom = module.weights
    assert operator.target(top) == bottom
    assert operator.blocks[top].matrix[0, 0] == 1
    assert operator.blocks[bottom].matrix[0, 0] == -q
    # T^2 acts by the scalar -q on V(1)
    square = operator.compose(operator)
    assert square.equals(WeightOperator.identity(module).scaled(-q))


@pytest.mark.parametrize("cd, w", [(A2, (1, 0)), (A2, (1, 1)), (A1xA1, (1, 1)), (SL2, (3,))])
def test_braid_relations_hold(cd, w):
    assert_all_passed(verify_braid(build_module(cd, w), RULE))


def test_rules_without_q_powers_are_rejected():
    rejected = [entry["rule"] for entry in calibrate_convention().rejected]
    assert str(ExponentRule(0, 0, 1)) in rejected
    assert str(ExponentRule(0, 0, -1)) in rejected


def test_words():
    module = build_module(A2, (1, 1))
    assert evaluate_word(parse_word("T1 T1^-1"), module, RULE).is_identity()
    assert evaluate_word(parse_word(""), module, RULE).is_identity()
    lhs = evaluate_word(parse_word("T1 T2 T1"), module, RULE)
    rhs = evaluate_word(parse_word("T2 T1 T2"), module, RULE)
    assert lhs.equals(rhs)
    assert not lhs.equals(evaluate_word(parse_word("T1"), module, RULE))

    operator = evaluate_word(parse_word("T2 T1"), module, RULE)
    weight = Weight((1, 1), (0, 0))
    assert operator.target(weight) == reflect(A2, reflect(A2, weight, 0), 1)


def test_operator_cache_must_match():
    module = build_module(SL2, (1,))
    cache = OperatorCache(module, RULE)
    with pytest.raises(ValueError):
        evaluate_word(parse_word("T1"), module, ExponentRule(0, 0, 1), cache=cache)


def test_theta_is_not_defined_on_modules():
    module = build_module(SL2, (1,))
    with pytest.raises(UnsupportedGeneratorError):
        evaluate_word(parse_word("T1 Th1"), module, RULE)


def test_truncated_modules_are_rejected():
    with pytest.warns(UserWarning):
        module = build_module(SL2, (2,), depth_limit=0)
    with pytest.raises(TruncatedModuleError):
        rickard_operator(module, "1", RULE)
