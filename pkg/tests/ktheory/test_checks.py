import pytest
from assertions import assert_all_passed

from decat.braid import candidate_rules
from decat.fieldmath import backend_manager
from decat.ktheory import (
    CHECKS,
    KTheoryModel,
    TangentConvention,
    calibrated_conventions,
    check_names,
    verify_ktheory,
)
from decat.ktheory.checks import (
    AFFINE_LHS,
    AFFINE_RHS,
    affine_check,
    all_ks,
    checks_at,
    commutator_check,
    cross_model_check,
    divided_checks,
    eq3_checks,
    lemma73_second_check,
)
from decat.ktheory.comparison import Monomial, compare_uniform
from decat.ktheory.conventions import tangent_candidates
from decat.ktheory.words import evaluate_geometric_word


def test_check_names():
    assert check_names("lemma73-2, commutator") == ["commutator", "lemma73-2"]
    assert check_names(None) == list(CHECKS)
    assert check_names("all") == list(CHECKS)
    with pytest.raises(ValueError):
        check_names("commutator,jacobi")


def test_tangent_candidates():
    candidates = tangent_candidates()
    assert len(candidates) == 8
    assert candidates[0] == TangentConvention(2, 1, 1)
    assert len(set(candidates)) == 8


def test_calibrated_conventions(evaluation_backend):
    conventions = calibrated_conventions(evaluation_backend)
    assert conventions.tangent == TangentConvention(2, -1, 1)
    assert conventions.rule in candidate_rules()
    assert [entry["convention"] for entry in conventions.rejected_tangent] == [
        str(TangentConvention(2, 1, 1))
    ]
    report = conventions.to_json()
    assert report["tangent"]["shift"] == "-t"
    assert set(report["rickard_rule"]) == {"a", "b", "epsilon", "coefficient"}
    assert report["affine_correction"] == 0


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_commutator(evaluation_backend, N):
    model = KTheoryModel(N)
    assert_all_passed([commutator_check(model, k) for k in all_ks(N)])


def test_commutator_symbolic():
    with backend_manager.using_backend("symbolic") as backend:
        model = KTheoryModel(2, TangentConvention(2, -1, 1), backend)
        assert_all_passed([commutator_check(model, k) for k in all_ks(2)])


@pytest.mark.parametrize("N, k", [(2, 2), (3, 2), (3, 3), (4, 3)])
def test_divided_powers(evaluation_backend, N, k):
    results = divided_checks(KTheoryModel(N), k)
    assert len(results) == k - 1
    assert_all_passed(results)


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("check", [name for name in CHECKS])
def test_verify_ktheory(evaluation_backend, N, check):
    report = verify_ktheory(N, checks=[check])
    assert report["passed"], report["checks"]
    assert all(result["name"] == check for result in report["checks"])
    assert report["conventions"]["tangent"]["shift"] == "-t"
    assert report["backend"]["backend"] == "evaluation"


def test_report_layout(evaluation_backend):
    report = verify_ktheory(2, k=1, checks=["commutator", "lemma73-2", "affine"])
    assert [result["name"] for result in report["checks"]] == ["commutator", "lemma73-2", "affine"]
    assert report["k"] == 1
    assert report["checks"][2]["details"]["ks"] == [1]
    with pytest.raises(ValueError):
        verify_ktheory(2, k=3)
    with pytest.raises(ValueError):
        verify_ktheory(-1)


def test_larger_grassmannians(evaluation_backend):
    report = verify_ktheory(4, checks=["lemma73-2"])
    assert report["passed"]
    assert len(report["checks"]) == 5


def test_lemma73_first_uses_the_calibrated_form(evaluation_backend):
    conventions = calibrated_conventions(evaluation_backend)
    model = KTheoryModel(3, conventions.tangent)
    results = checks_at(model, 1, conventions, ["lemma73-1"])
    assert_all_passed(results)
    details = results[0].details
    assert details["form"] == str(conventions.left_adjoint_form)
    assert details["expected"] == str(conventions.left_adjoint_form.monomial(2))
    assert details["monomial"] == conventions.left_adjoint_form.monomial(2).to_json()
    assert details["shift_sign"] in ("+", "-")


def test_shift_forms_fit_every_calibration_instance(evaluation_backend):
    conventions = calibrated_conventions(evaluation_backend)
    for fit in conventions.form_fit.values():
        matched, total = fit.split("/")
        assert matched == total
    report = conventions.to_json()
    assert report["adjoint_form"]["form"] == str(conventions.adjoint_form)
    assert report["lemma73_1_form"]["form"] == str(conventions.left_adjoint_form)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_shifted_checks_are_exact(evaluation_backend, N):
    conventions = calibrated_conventions(evaluation_backend)
    model = KTheoryModel(N, conventions.tangent)
    for k in all_ks(N):
        results = checks_at(model, k, conventions, ["adjoint", "lemma73-1", "lemma73-2", "eq3"])
        assert_all_passed(results)
    lemma = lemma73_second_check(model, 0, conventions.rule)
    assert lemma.details["monomial"]["det_exponent"] == 0
    assert lemma.details["monomial"]["t_exponent"] == N
    assert lemma.details["monomial"]["sign"] == (-1) ** N
    assert all(r.details.get("ratio", "1") == "1" for k in all_ks(N) for r in eq3_checks(model, k))


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_affine_relation_is_exact(evaluation_backend, N):
    conventions = calibrated_conventions(evaluation_backend)
    assert conventions.affine_correction == 0
    model = KTheoryModel(N, conventions.tangent)
    result = affine_check(model, conventions.rule, all_ks(N), conventions.affine_correction)
    assert result.passed, result.details
    assert result.details["correction"] == 0
    assert result.details["residuals"] == {str(k): "det^-1" for k in all_ks(N)}


@pytest.mark.parametrize("correction", [-1, 1])
def test_affine_relation_rejects_a_nonzero_correction(evaluation_backend, correction):
    conventions = calibrated_conventions(evaluation_backend)
    model = KTheoryModel(2, conventions.tangent)
    assert affine_check(model, conventions.rule, [1], correction).passed
    result = affine_check(model, conventions.rule, all_ks(2), correction)
    assert not result.passed
    assert result.details["counterexample"]["k"] == 0
    assert result.details["counterexample"]["ratio"] == "det^-1"


def test_affine_relation_needs_the_det_twist(evaluation_backend):
    conventions = calibrated_conventions(evaluation_backend)
    model = KTheoryModel(3, conventions.tangent)
    lhs = evaluate_geometric_word(AFFINE_LHS, model, 1, conventions.rule)
    rhs = evaluate_geometric_word(AFFINE_RHS, model, 1, conventions.rule)
    comparison = compare_uniform(lhs.matrix, rhs.matrix, model.variables)
    assert comparison.monomial == Monomial(1, 0, -1)
    assert not comparison.holds_with(Monomial(1, 0))


def test_rules_are_tried_in_order(evaluation_backend):
    conventions = calibrated_conventions(evaluation_backend)
    rules = candidate_rules()
    tried = [str(rule) for rule in rules[: rules.index(conventions.rule)]]
    assert [entry["rule"] for entry in conventions.rejected_rules] == tried
    assert all(entry["first_failure"]["check"] == "affine" for entry in conventions.rejected_rules)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_verify_ktheory_symbolic(N):
    with backend_manager.using_backend("symbolic"):
        report = verify_ktheory(N)
    assert report["passed"], [r for r in report["checks"] if not r["passed"]]
    assert report["backend"]["backend"] == "symbolic"
    assert report["conventions"]["affine_correction"] == 0


def test_cross_model_scalars(evaluation_backend):
    result = cross_model_check(KTheoryModel(2), all_ks(2))
    assert result.passed
    assert set(result.details["scalars"]) == {"E@k=1", "F@k=1", "E@k=2", "F@k=2"}
    assert all(value != "0" for value in result.details["scalars"].values())
