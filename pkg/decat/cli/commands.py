"""The subcommands. Each takes a :class:`RunConfig` and returns ``(report, passed)``,
where ``passed`` is None for commands that verify nothing."""

import logging
from typing import Optional, Tuple

from decat.braid.calibration import calibrate_convention, verify_braid
from decat.braid.operators import evaluate_word
from decat.braid.words import parse_word
from decat.cli.config import RunConfig
from decat.core.cartan import CartanData, load_graph, parse_framing
from decat.core.weyl import height, is_finite_type
from decat.fieldmath import backend_manager
from decat.ktheory.checks import check_names
from decat.ktheory.conventions import calibrated_conventions
from decat.ktheory.kernels import KTheoryModel
from decat.ktheory.suite import verify_ktheory
from decat.ktheory.words import evaluate_geometric_word, render
from decat.qlaurent import linalg
from decat.quiver.geometry import adjunction_shift, dimension_table, hecke_dim
from decat.rep.builder import build_module
from decat.rep.module import IntegrableModule
from decat.rep.relations import FAMILIES, module_checks, summarize, verify_relations
from decat.rep.serialization import load_module, save_module
from decat.util.reports import all_passed

logger = logging.getLogger(__name__)

Result = Tuple[dict, Optional[bool]]


def load_input(config: RunConfig) -> Tuple[CartanData, Tuple[int, ...]]:
    "The graph of ``--graph`` and the framing of ``--w`` (or of the graph file)."
    if config.graph is None:
        raise ValueError(f"'{config.command}' needs --graph.")
    cd, w = load_graph(config.graph)
    if config.w is not None:
        w = parse_framing(cd, config.w)
    if w is None:
        raise ValueError(f"'{config.command}' needs --w (or a 'w' entry in the graph file).")
    return cd, w


def _module(config: RunConfig) -> IntegrableModule:
    if config.module is not None:
        return load_module(config.module)
    cd, w = load_input(config)
    return build_module(cd, w, depth_limit=config.depth, jobs=config.jobs)


def _height_bound(config: RunConfig, cd: CartanData, w) -> int:
    if config.height is not None:
        return config.height
    if not is_finite_type(cd):
        raise ValueError("Graphs of infinite type need an explicit --height.")
    return height(cd, w)


def _row_json(row) -> dict:
    return {
        "v": list(row.weight.v),
        "pairings": list(row.pairings),
        "dim": row.dim,
        "canonical_weight": row.canonical_weight,
        "empty": row.empty,
    }


def cartan_info(config: RunConfig) -> Result:
    cd, w = load_input(config)
    rows = dimension_table(cd, w, _height_bound(config, cd, w))
    report = {
        "config": config.to_json(),
        "vertices": list(cd.vertices),
        "cartan_matrix": cd.cartan_matrix.tolist(),
        "finite_type": is_finite_type(cd),
        "w": list(w),
        "rows": [_row_json(row) for row in rows],
    }
    return report, None


def quiver_dims(config: RunConfig) -> Result:
    "The dimension table plus, per vertex, the Hecke dimension and adjunction shift (r=1)."
    cd, w = load_input(config)
    rows = []
    for row in dimension_table(cd, w, _height_bound(config, cd, w)):
        entry = _row_json(row)
        entry["hecke"] = {}
        for vertex in cd.vertices:
            hecke = hecke_dim(cd, row.weight, vertex, 1)
            entry["hecke"][vertex] = {
                "dim": hecke.dim,
                "empty": hecke.empty,
                "adjunction_shift": list(adjunction_shift(cd, row.weight, vertex, 1)),
            }
        rows.append(entry)
    return {"config": config.to_json(), "vertices": list(cd.vertices), "w": list(w), "rows": rows}, None


def rep_build(config: RunConfig) -> Result:
    cd, w = load_input(config)
    module = build_module(cd, w, depth_limit=config.depth, jobs=config.jobs)
    report = {
        "config": config.to_json(),
        "highest_weight": str(module.highest_weight),
        "truncated": module.truncated,
        "depth_limit": module.depth_limit,
        "total_dimension": module.total_dimension,
    }
    if module.truncated:
        # Multiplicities are only known down to the depth limit.
        report["support"] = {
            str(weight): module.dim(weight) for weight in module.weights if module.within_depth(weight)
        }
    else:
        report["character"] = {str(weight): m for weight, m in module.character().items()}
    if config.output not in (None, "-"):
        save_module(module, config.output)
    return report, None


def rep_verify(config: RunConfig) -> Result:
    module = _module(config)
    families = list(config.checks) if config.checks else list(FAMILIES)
    relations = verify_relations(module, families, jobs=config.jobs)
    characters = module_checks(module)
    results = relations + characters
    report = {
        "config": config.to_json(),
        "highest_weight": str(module.highest_weight),
        "summary": summarize(relations, families),
        "checks": [r.to_json() for r in results],
        "passed": all_passed(results),
    }
    return report, report["passed"]


def braid_eval(config: RunConfig) -> Result:
    if config.word is None:
        raise ValueError("'braid eval' needs --word.")
    if config.geometric:
        return _geometric_eval(config)
    module = _module(config)
    calibration = calibrate_convention()
    word = parse_word(config.word, module.cartan)
    operator = evaluate_word(word, module, calibration.rule)
    report = {
        "config": config.to_json(),
        "calibration": calibration.to_json(),
        "word": str(word),
        "operator": operator.to_json(),
    }
    passed = None
    if config.minus is not None:
        other = evaluate_word(parse_word(config.minus, module.cartan), module, calibration.rule)
        difference = operator.difference(other)
        zero = all(linalg.is_zero(matrix) for matrix in difference.values())
        report["difference_is_zero"] = zero
        passed = zero
    return report, passed


def _geometric_eval(config: RunConfig) -> Result:
    if config.N is None or config.k is None:
        raise ValueError("'braid eval --geometric' needs --N and --k.")
    backend = backend_manager.active_backend
    conventions = calibrated_conventions(backend)
    model = KTheoryModel(config.N, conventions.tangent, backend)
    word = parse_word(config.word)
    operator = evaluate_geometric_word(word, model, config.k, conventions.rule)
    report = {
        "config": config.to_json(),
        "conventions": conventions.to_json(),
        "backend": backend.describe(config.N),
        "word": str(word),
        "source_k": operator.source_k,
        "target_k": operator.target_k,
        "matrix": render(model, operator),
    }
    passed = None
    if config.minus is not None:
        other = evaluate_geometric_word(parse_word(config.minus), model, config.k, conventions.rule)
        zero = other.target_k == operator.target_k and all(
            backend.is_zero(a - b)
            for row_a, row_b in zip(operator.matrix, other.matrix)
            for a, b in zip(row_a, row_b)
        )
        report["difference_is_zero"] = zero
        passed = zero
    return report, passed


def braid_verify(config: RunConfig) -> Result:
    module = _module(config)
    calibration = calibrate_convention()
    results = verify_braid(module, calibration.rule, jobs=config.jobs)
    report = {
        "config": config.to_json(),
        "calibration": calibration.to_json(),
        "highest_weight": str(module.highest_weight),
        "checks": [r.to_json() for r in results],
        "passed": all_passed(results),
    }
    return report, report["passed"]


def ktheory_verify(config: RunConfig) -> Result:
    if config.N is None:
        raise ValueError("'ktheory verify' needs --N.")
    checks = check_names(",".join(config.checks) if config.checks else None)
    report = verify_ktheory(config.N, config.k, checks, jobs=config.jobs)
    report["config"] = config.to_json()
    return report, report["passed"]


COMMANDS = {
    "cartan info": cartan_info,
    "quiver dims": quiver_dims,
    "rep build": rep_build,
    "rep verify": rep_verify,
    "braid eval": braid_eval,
    "braid verify": braid_verify,
    "ktheory verify": ktheory_verify,
}
