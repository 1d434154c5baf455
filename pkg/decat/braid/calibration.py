"""Braid relation checks, and the calibration of the exponent rule against them.

The q-powers of the Rickard sum are not fixed a priori. :func:`calibrate_convention`
searches a small grid of :class:`~decat.braid.operators.ExponentRule` candidates and
keeps the first one for which, on V(Lambda_i) and V(Lambda_i + Lambda_j) for an edge
(i, j), every T_k is invertible and all braid relations hold:

* T_i T_j T_i = T_j T_i T_j when <alpha_i, alpha_j> = -1;
* T_i T_j = T_j T_i when <alpha_i, alpha_j> = 0.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from decat.braid.operators import ExponentRule, OperatorCache, WeightOperator
from decat.braid.words import BraidWord, t
from decat.core.cartan import CartanData, GraphData, build_cartan, reflect, symmetric_pairing
from decat.core.weyl import is_finite_type
from decat.errors import CalibrationError, InternalConsistencyError
from decat.qlaurent import linalg
from decat.rep.builder import build_module
from decat.rep.module import IntegrableModule
from decat.util.parallel import ordered_map
from decat.util.reports import CheckResult

logger = logging.getLogger(__name__)

A_RANGE = range(-2, 3)
B_RANGE = range(-1, 2)


def candidate_rules() -> List[ExponentRule]:
    "The search grid, simplest exponents first and epsilon = +1 before -1."
    rules = [
        ExponentRule(a, b, epsilon)
        for a, b in itertools.product(A_RANGE, B_RANGE)
        for epsilon in (1, -1)
    ]
    return sorted(rules, key=lambda r: (abs(r.a) + abs(r.b), -r.a, -r.b, -r.epsilon))


def braid_relation(cd: CartanData, i: int, j: int) -> Tuple[BraidWord, BraidWord, str]:
    "The two sides of the braid relation between vertices i and j, and its statement."
    x, y = cd.vertices[i], cd.vertices[j]
    pairing = symmetric_pairing(cd, cd.unit(i), cd.unit(j))
    if pairing == -1:
        return (
            BraidWord((t(x), t(y), t(x))),
            BraidWord((t(y), t(x), t(y))),
            "T_i T_j T_i = T_j T_i T_j if <alpha_i, alpha_j> = -1",
        )
    if pairing == 0:
        return (
            BraidWord((t(x), t(y))),
            BraidWord((t(y), t(x))),
            "T_i T_j = T_j T_i if <alpha_i, alpha_j> = 0",
        )
    raise ValueError(
        f"No braid relation between {x} and {y}: <alpha_i, alpha_j> = {pairing} (not simply laced)."
    )


def _first_difference(lhs: WeightOperator, rhs: WeightOperator) -> Optional[dict]:
    try:
        difference = lhs.difference(rhs)
    except ValueError as e:
        return {"reason": str(e)}
    for source in sorted(difference, key=lambda w: w.sort_key()):
        if not linalg.is_zero(difference[source]):
            return {
                "weight": str(source),
                "lhs": linalg.to_text(lhs.blocks[source].matrix),
                "rhs": linalg.to_text(rhs.blocks[source].matrix),
            }
    return None


def _module_details(module: IntegrableModule) -> dict:
    return {"module": str(module.highest_weight)}


def generator_checks(cache: OperatorCache, k: int) -> List[CheckResult]:
    "Weight compatibility and invertibility of T_k."
    module = cache.module
    cd = module.cartan
    operator = cache.letter(t(cd.vertices[k]))
    details = dict(_module_details(module), vertex=cd.vertices[k])
    misplaced = [
        str(source)
        for source, (target, _) in operator.blocks.items()
        if target != reflect(cd, source, k)
    ]
    compatibility = CheckResult(
        "weight-compatibility",
        "T_i maps M(lambda) to M(s_i lambda)",
        not misplaced,
        dict(details, **({"counterexample": misplaced[0]} if misplaced else {})),
    )
    singular = None
    for source in operator.sources:
        target, matrix = operator.blocks[source]
        if matrix.shape[0] != matrix.shape[1] or linalg.determinant(matrix).is_zero():
            singular = str(source)
            break
    invertibility = CheckResult(
        "invertibility",
        "every block of T_i is invertible",
        singular is None,
        dict(details, **({"counterexample": singular} if singular else {})),
    )
    return [compatibility, invertibility]


def relation_check(cache: OperatorCache, i: int, j: int) -> CheckResult:
    cd = cache.module.cartan
    lhs_word, rhs_word, identity = braid_relation(cd, i, j)
    try:
        difference = _first_difference(cache.word(lhs_word), cache.word(rhs_word))
    except InternalConsistencyError as e:
        difference = {"reason": str(e)}
    details = dict(
        _module_details(cache.module),
        vertices=[cd.vertices[i], cd.vertices[j]],
        relation=f"{lhs_word} = {rhs_word}",
    )
    if difference is not None:
        details["counterexample"] = difference
    return CheckResult("braid", identity, difference is None, details)


def verify_braid(
    module: IntegrableModule, rule: ExponentRule, jobs: Optional[int] = None
) -> List[CheckResult]:
    """Check every generator and every braid relation of a complete module.

    Results come per vertex (compatibility, invertibility), then per vertex pair
    i < j."""
    cache = OperatorCache(module, rule)
    cd = module.cartan
    # Generators are built here, so the threads below only read the cache.
    results = []
    for k in range(cd.rank):
        results.extend(generator_checks(cache, k))
    pairs = list(itertools.combinations(range(cd.rank), 2))
    results.extend(ordered_map(lambda p: relation_check(cache, *p), pairs, jobs=jobs))
    logger.info(
        "Braid checks on V(%s) with %s: %d of %d passed.",
        module.highest_weight,
        rule,
        sum(r.passed for r in results),
        len(results),
    )
    return results


@dataclass
class CalibrationResult:
    rule: ExponentRule
    graph: str
    modules: List[str]
    rejected: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "rule": self.rule.to_json(),
            "graph": self.graph,
            "modules": self.modules,
            "rejected": self.rejected,
        }


def default_calibration_graph() -> CartanData:
    "The A2 graph 1 - 2."
    return build_cartan(GraphData(("1", "2"), (("1", "2"),)))


def calibration_modules(cd: CartanData) -> List[IntegrableModule]:
    "V(Lambda_i) and V(Lambda_i + Lambda_j) for the first edge (i, j)."
    if not is_finite_type(cd) or not cd.graph.edges:
        raise ValueError("Calibration needs a finite-type graph with at least one edge.")
    i, j = (cd.index(v) for v in cd.graph.edges[0])
    single = tuple(int(k == i) for k in range(cd.rank))
    double = tuple(int(k in (i, j)) for k in range(cd.rank))
    return [build_module(cd, single), build_module(cd, double)]


def _failures(modules: Sequence[IntegrableModule], rule: ExponentRule) -> List[dict]:
    failures = []
    for module in modules:
        for result in verify_braid(module, rule, jobs=1):
            if not result.passed:
                failures.append({"check": result.name, **result.details})
        if failures:
            break
    return failures


@lru_cache(maxsize=None)
def calibrate_convention(cd: Optional[CartanData] = None) -> CalibrationResult:
    """The first candidate rule (in :func:`candidate_rules` order) that passes the braid
    checks on the calibration modules of ``cd`` (A2 by default).

    Raises CalibrationError listing every candidate and its first failing check if no
    rule passes."""
    cd = default_calibration_graph() if cd is None else cd
    modules = calibration_modules(cd)
    rejected = []
    for rule in candidate_rules():
        failures = _failures(modules, rule)
        if not failures:
            logger.info("Calibrated the braid exponent rule: %s.", rule)
            return CalibrationResult(
                rule,
                graph=", ".join(f"{a}-{b}" for a, b in cd.graph.edges),
                modules=[str(m.highest_weight) for m in modules],
                rejected=rejected,
            )
        logger.debug("Rejected %s: %s", rule, failures[0])
        rejected.append({"rule": str(rule), "first_failure": failures[0]})
    lines = "\n".join(f"  {entry['rule']}: {entry['first_failure']}" for entry in rejected)
    raise CalibrationError(f"No exponent rule satisfies the braid relations:\n{lines}")
