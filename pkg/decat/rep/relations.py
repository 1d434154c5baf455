"""The relation suite: exact identities that every built module must satisfy.

Five families of U-dot relations are checked on every weight block:

* ``commutator``: (f_i e_i - e_i f_i) a_lambda = [<lambda, alpha_i>] a_lambda;
* ``mixed-commutator``: e_i f_j = f_j e_i for i != j;
* ``serre``: e_i e_j e_i = e_i^(2) e_j + e_j e_i^(2) (and the same for f) when
  <alpha_i, alpha_j> = -1, e_i e_j = e_j e_i when the vertices are not adjacent;
* ``divided-power``: e_i^r = [r]! e_i^(r) (and for f);
* ``divided-power-step``: e_i e_i^(r) = [r+1] e_i^(r+1) (and for f).

Besides the relations, :func:`module_checks` compares the character with Freudenthal's
recursion, checks its Weyl symmetry and, for finite type, the Weyl dimension formula.

On a truncated module a relation is only checked at the weights where every letter of
it stays within the truncation depth.
"""

import logging
import warnings
from typing import Dict, List, Optional, Sequence

from decat.core.cartan import Weight, pair, reflect, symmetric_pairing
from decat.core.weyl import is_finite_type, weyl_dimension
from decat.qlaurent import linalg
from decat.qlaurent.laurent import QLaurent
from decat.qlaurent.quantum import qfactorial, qint
from decat.rep.freudenthal import freudenthal_character
from decat.rep.module import IntegrableModule
from decat.udot.evaluate import descent, evaluate_block
from decat.udot.terms import UdotTerm, a, e, f
from decat.util.parallel import ordered_map
from decat.util.reports import CheckResult

logger = logging.getLogger(__name__)

FAMILIES = (
    "commutator",
    "mixed-commutator",
    "serre",
    "divided-power",
    "divided-power-step",
)

IDENTITIES = {
    "commutator": "(f_i e_i - e_i f_i) a_lambda = [<lambda, alpha_i>] a_lambda",
    "mixed-commutator": "e_i f_j a_lambda = f_j e_i a_lambda for i != j",
    "serre": "e_i e_j e_i = e_i^(2) e_j + e_j e_i^(2) if <alpha_i, alpha_j> = -1, "
    "e_i e_j = e_j e_i if <alpha_i, alpha_j> = 0 (and the same for f)",
    "divided-power": "e_i^r = [r]! e_i^(r) (and the same for f)",
    "divided-power-step": "e_i e_i^(r) = [r+1] e_i^(r+1) (and the same for f)",
}

GENERATORS = {"E": e, "F": f}


class Relation:
    """A linear combination of terms that must act by zero, instantiated at a weight.

    ``terms`` lists (coefficient, letters) pairs; every term is followed by the
    idempotent a_lambda."""

    def __init__(self, family: str, weight: Weight, description: str, terms):
        self.family = family
        self.weight = weight
        self.description = description
        self.terms = [
            UdotTerm.of(*letters, a(weight), scalar=QLaurent.coerce(coefficient))
            for coefficient, letters in terms
        ]

    def check(self, module: IntegrableModule) -> CheckResult:
        block = evaluate_block(self.terms, module, self.weight)
        passed = linalg.is_zero(block.matrix)
        details = {
            "relation": self.description,
            "weight": str(self.weight),
            "target": str(block.target),
        }
        if not passed:
            details["terms"] = [str(term) for term in self.terms]
            details["counterexample"] = linalg.to_text(block.matrix)
        return CheckResult(self.family, IDENTITIES[self.family], passed, details)


def _vertex_pairs(module: IntegrableModule):
    rank = module.cartan.rank
    return [(i, j) for i in range(rank) for j in range(rank) if i != j]


def relations_at(module: IntegrableModule, weight: Weight, max_power: int = 3) -> List[Relation]:
    """All relation instances at one weight, in a fixed order."""
    cd = module.cartan
    names = cd.vertices
    result = []
    for i in range(cd.rank):
        n = pair(cd, weight, i)
        result.append(
            Relation(
                "commutator",
                weight,
                f"(F{names[i]} E{names[i]} - E{names[i]} F{names[i]} - [{n}]) a[{weight}]",
                [(1, (f(names[i]), e(names[i]))), (-1, (e(names[i]), f(names[i]))), (-qint(n), ())],
            )
        )
    for i, j in _vertex_pairs(module):
        result.append(
            Relation(
                "mixed-commutator",
                weight,
                f"(E{names[i]} F{names[j]} - F{names[j]} E{names[i]}) a[{weight}]",
                [(1, (e(names[i]), f(names[j]))), (-1, (f(names[j]), e(names[i])))],
            )
        )
    for i, j in _vertex_pairs(module):
        pairing = symmetric_pairing(cd, cd.unit(i), cd.unit(j))
        for direction, g in GENERATORS.items():
            x, y = names[i], names[j]
            if pairing == -1:
                result.append(
                    Relation(
                        "serre",
                        weight,
                        f"({direction}{x} {direction}{y} {direction}{x} - {direction}{x}^(2) "
                        f"{direction}{y} - {direction}{y} {direction}{x}^(2)) a[{weight}]",
                        [
                            (1, (g(x), g(y), g(x))),
                            (-1, (g(x, 2), g(y))),
                            (-1, (g(y), g(x, 2))),
                        ],
                    )
                )
            elif pairing == 0 and i < j:
                result.append(
                    Relation(
                        "serre",
                        weight,
                        f"({direction}{x} {direction}{y} - {direction}{y} {direction}{x}) "
                        f"a[{weight}]",
                        [(1, (g(x), g(y))), (-1, (g(y), g(x)))],
                    )
                )
    for i in range(cd.rank):
        x = names[i]
        for direction, g in GENERATORS.items():
            length = module.string_length(i, weight, direction)
            top = max_power if length is None else max(2, min(length + 1, max_power))
            for r in range(2, top + 1):
                result.append(
                    Relation(
                        "divided-power",
                        weight,
                        f"({direction}{x}^{r} - [{r}]! {direction}{x}^({r})) a[{weight}]",
                        [(1, (g(x),) * r), (-qfactorial(r), (g(x, r),))],
                    )
                )
            for r in range(1, top):
                result.append(
                    Relation(
                        "divided-power-step",
                        weight,
                        f"({direction}{x} {direction}{x}^({r}) - [{r + 1}] "
                        f"{direction}{x}^({r + 1})) a[{weight}]",
                        [(1, (g(x), g(x, r))), (-qint(r + 1), (g(x, r + 1),))],
                    )
                )
    return result


def checkable(module: IntegrableModule, relation: Relation) -> bool:
    "Whether every letter of the relation stays within the module's depth."
    if not module.truncated:
        return True
    cd = module.cartan
    reach = max(descent(term, cd) for term in relation.terms)
    return relation.weight.height + reach <= module.depth_limit


def verify_relations(
    module: IntegrableModule,
    families: Optional[Sequence[str]] = None,
    jobs: Optional[int] = None,
) -> List[CheckResult]:
    """Check the relation families on every weight block of the module.

    Results come in a fixed order: by family, then by weight, then by the order of
    :func:`relations_at`."""
    families = list(FAMILIES if families is None else families)
    unknown = set(families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"Unknown relation families {sorted(unknown)}; known: {list(FAMILIES)}.")
    if module.truncated:
        warnings.warn(
            f"Verifying relations on a module truncated at depth {module.depth_limit}; only "
            "the interior weights are checked."
        )
    instances = [
        relation
        for weight in module.weights
        for relation in relations_at(module, weight)
        if relation.family in families and checkable(module, relation)
    ]
    instances.sort(key=lambda relation: families.index(relation.family))
    results = ordered_map(lambda relation: relation.check(module), instances, jobs=jobs)
    logger.info(
        "Checked %d relation instances: %d failed.",
        len(results),
        sum(not result.passed for result in results),
    )
    return results


def summarize(results: Sequence[CheckResult], families: Sequence[str] = FAMILIES) -> Dict[str, dict]:
    "Per-family counts and verdicts; every requested family is listed, checked or not."
    summary = {family: {"checked": 0, "failed": 0} for family in families}
    for result in results:
        entry = summary.setdefault(result.name, {"checked": 0, "failed": 0})
        entry["checked"] += 1
        entry["failed"] += int(not result.passed)
    for entry in summary.values():
        entry["passed"] = entry["failed"] == 0
    return summary


def _check(name: str, identity: str, passed: bool, **details) -> CheckResult:
    return CheckResult(name, identity, passed, details)


def module_checks(module: IntegrableModule) -> List[CheckResult]:
    """Character checks of a complete module: Freudenthal multiplicities, Weyl symmetry
    and the Weyl dimension formula. Truncated modules get an empty list."""
    if module.truncated:
        return []
    cd = module.cartan
    character = module.character()
    checks = []
    symmetric = True
    counterexample = None
    for weight, m in character.items():
        for i in range(cd.rank):
            reflected = reflect(cd, weight, i)
            if module.dim(reflected) != m:
                symmetric = False
                counterexample = counterexample or {
                    "weight": str(weight),
                    "reflected": str(reflected),
                    "dims": [m, module.dim(reflected)],
                }
    details = {} if symmetric else {"counterexample": counterexample}
    checks.append(
        _check("weyl-symmetry", "dim M(lambda) = dim M(s_i lambda)", symmetric, **details)
    )
    if is_finite_type(cd):
        oracle = freudenthal_character(cd, module.w)
        passed = oracle == character
        details = {"total_dimension": module.total_dimension}
        if not passed:
            details["differences"] = {
                str(weight): [character.get(weight, 0), oracle.get(weight, 0)]
                for weight in sorted(set(oracle) | set(character), key=Weight.sort_key)
                if character.get(weight, 0) != oracle.get(weight, 0)
            }
        checks.append(
            _check("freudenthal", "multiplicities agree with Freudenthal's recursion", passed, **details)
        )
        expected = weyl_dimension(cd, module.w)
        checks.append(
            _check(
                "weyl-dimension",
                "dim V(Lambda_w) = prod_beta <Lambda_w + rho, beta> / <rho, beta>",
                expected == module.total_dimension,
                expected=expected,
                actual=module.total_dimension,
            )
        )
    return checks
