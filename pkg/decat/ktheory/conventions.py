"""Calibration of the equivariant conventions of the K-theory model.

Some choices are not determined by the geometry alone and are fixed by self-tests that
run once per backend:

* the tangent convention (t-exponent on the cotangent fibres and the value of the shift
  {1}), the first candidate for which EF - FE = [N - 2k] id holds for all k and N <= 3;
* the exponent rule of the Rickard sum, the first rule (in the order of
  :func:`decat.braid.calibration.candidate_rules`) for which every T(k) is invertible and
  T = Theta T^-1 Theta (x) det(C^N)^-1 {c(N - 2k)} holds exactly for N <= 3, with c tried
  in the order 0, -1, 1;
* the shift forms alpha (beta t)^(sigma m) of the adjoint and lemma73-1 identities, fitted
  once over N <= 3 and then held fixed for every N.

The chosen conventions, and every rejected candidate, go into each ktheory report.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from decat.braid.calibration import candidate_rules
from decat.braid.operators import ExponentRule
from decat.errors import CalibrationError
from decat.fieldmath import Backend, backend_manager
from decat.ktheory.checks import (
    adjoint_comparisons,
    affine_check,
    all_ks,
    commutator_check,
    lemma73_first_comparison,
)
from decat.ktheory.comparison import SHIFT_FORMS, Monomial, ShiftForm
from decat.ktheory.grassmannian import TangentConvention
from decat.ktheory.kernels import KTheoryModel

logger = logging.getLogger(__name__)

CALIBRATION_N = (1, 2, 3)


def tangent_candidates() -> List[TangentConvention]:
    "Fibre exponent 2 before -2; for each, {1} -> t, -t, 1/t, -1/t."
    return [
        TangentConvention(fibre, sign, power)
        for fibre in (2, -2)
        for power in (1, -1)
        for sign in (1, -1)
    ]


def _first_failure(results) -> Optional[dict]:
    for result in results:
        if not result.passed:
            return {"check": result.name, **result.details}
    return None


@lru_cache(maxsize=None)
def calibrate_tangent_convention(backend: Backend) -> Tuple[TangentConvention, tuple]:
    "The first tangent convention passing the commutator checks, and the rejected ones."
    rejected = []
    for convention in tangent_candidates():
        failure = None
        for N in CALIBRATION_N:
            model = KTheoryModel(N, convention, backend)
            failure = _first_failure(commutator_check(model, k) for k in all_ks(N))
            if failure is not None:
                break
        if failure is None:
            logger.info("Calibrated the tangent convention: %s.", convention)
            return convention, tuple(rejected)
        logger.debug("Rejected %s: %s", convention, failure)
        rejected.append({"convention": str(convention), "first_failure": failure})
    lines = "\n".join(f"  {entry['convention']}: {entry['first_failure']}" for entry in rejected)
    raise CalibrationError(f"No tangent convention satisfies EF - FE = [N-2k] id:\n{lines}")


AFFINE_CORRECTIONS = (0, -1, 1)


@lru_cache(maxsize=None)
def calibrate_rickard_rule(
    backend: Backend, convention: TangentConvention
) -> Tuple[ExponentRule, int, tuple]:
    """The first exponent rule, and correction c, passing the affine check for N <= 3,
    and the rejected rules."""
    models = [KTheoryModel(N, convention, backend) for N in CALIBRATION_N]
    rejected = []
    for rule in candidate_rules():
        first_failure = None
        for correction in AFFINE_CORRECTIONS:
            failure = None
            for model in models:
                result = affine_check(model, rule, all_ks(model.N), correction)
                if not result.passed:
                    failure = {"check": result.name, **result.details}
                    break
            if failure is None:
                logger.info("Calibrated the geometric Rickard rule: %s, c = %d.", rule, correction)
                return rule, correction, tuple(rejected)
            first_failure = first_failure or failure
        logger.debug("Rejected %s: %s", rule, first_failure)
        rejected.append({"rule": str(rule), "first_failure": first_failure})
    lines = "\n".join(f"  {entry['rule']}: {entry['first_failure']}" for entry in rejected)
    raise CalibrationError(f"No exponent rule makes T(k) satisfy the affine relation:\n{lines}")


def _fitted_form(instances: Sequence[Tuple[Optional[Monomial], int]]) -> Tuple[ShiftForm, int]:
    "The form in SHIFT_FORMS matching most (ratio, m) instances, first wins ties."
    best, best_count = SHIFT_FORMS[0], -1
    for form in SHIFT_FORMS:
        count = sum(form.matches(monomial, m) for monomial, m in instances)
        if count > best_count:
            best, best_count = form, count
    return best, best_count


@lru_cache(maxsize=None)
def calibrate_shift_forms(
    backend: Backend, convention: TangentConvention, rule: ExponentRule
) -> Tuple[ShiftForm, ShiftForm, dict]:
    """The shift forms of the adjoint and lemma73-1 identities, fitted once over N <= 3.

    The forms are then fixed for every N, so a k or N whose ratio disagrees fails its
    check instead of refitting."""
    adjoints, left_adjoints = [], []
    for N in CALIBRATION_N:
        model = KTheoryModel(N, convention, backend)
        for k in all_ks(N):
            adjoints += [(c.monomial, m) for _, m, c in adjoint_comparisons(model, k)]
            left_adjoints.append((lemma73_first_comparison(model, k, rule).monomial, 2 * k))
    adjoint_form, adjoint_count = _fitted_form(adjoints)
    left_form, left_count = _fitted_form(left_adjoints)
    fit = {
        "adjoint": f"{adjoint_count}/{len(adjoints)}",
        "lemma73-1": f"{left_count}/{len(left_adjoints)}",
    }
    if adjoint_count < len(adjoints) or left_count < len(left_adjoints):
        logger.warning("No shift form fits every calibration instance: %s.", fit)
    logger.info("Calibrated the shift forms: adjoint %s, lemma73-1 %s.", adjoint_form, left_form)
    return adjoint_form, left_form, fit


@dataclass
class KTheoryConventions:
    tangent: TangentConvention
    rule: ExponentRule
    affine_correction: int = 0
    adjoint_form: ShiftForm = ShiftForm(sigma=-1)
    left_adjoint_form: ShiftForm = ShiftForm(sigma=-1)
    rejected_tangent: List[dict] = field(default_factory=list)
    rejected_rules: List[dict] = field(default_factory=list)
    form_fit: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "tangent": self.tangent.to_json(),
            "rickard_rule": self.rule.to_json(),
            "affine_correction": self.affine_correction,
            "adjoint_form": self.adjoint_form.to_json(),
            "lemma73_1_form": self.left_adjoint_form.to_json(),
            "form_fit": self.form_fit,
            "rejected_tangent": self.rejected_tangent,
            "rejected_rules": self.rejected_rules,
        }


def calibrated_conventions(backend: Optional[Backend] = None) -> KTheoryConventions:
    "Every convention for ``backend`` (the active backend by default)."
    backend = backend if backend is not None else backend_manager.active_backend
    tangent, rejected_tangent = calibrate_tangent_convention(backend)
    rule, correction, rejected_rules = calibrate_rickard_rule(backend, tangent)
    adjoint_form, left_form, fit = calibrate_shift_forms(backend, tangent, rule)
    return KTheoryConventions(
        tangent,
        rule,
        correction,
        adjoint_form,
        left_form,
        list(rejected_tangent),
        list(rejected_rules),
        fit,
    )
