"""Reading and writing modules as JSON.

The file holds the graph, the framing, the support with basis labels and contravariant
forms, and every generator matrix with entries in the canonical text form of
:class:`~decat.qlaurent.fraction.QFraction`. Weights, generators and keys are written in
a fixed order, so saving the same module twice gives identical files.
"""

import json
import logging
from pathlib import Path
from typing import Union

import numpy as np

from decat.core.cartan import Weight, parse_graph
from decat.errors import ModuleFormatError
from decat.qlaurent import linalg
from decat.rep.module import IntegrableModule

logger = logging.getLogger(__name__)

FORMAT = "decat-module"
VERSION = 1


def module_to_json(module: IntegrableModule) -> dict:
    cd = module.cartan
    graph = {"vertices": list(cd.vertices), "edges": [list(h) for h in cd.graph.edges]}
    if cd.graph.orientation is not None:
        graph["orientation"] = [list(h) for h in cd.graph.orientation]
    weights = [
        {
            "weight": str(weight),
            "dim": module.dim(weight),
            "labels": list(module.labels[weight]),
            "gram": linalg.to_text(module.gram[weight]),
        }
        for weight in module.weights
    ]
    generators = []
    for direction, matrices in (("E", module.e_matrices), ("F", module.f_matrices)):
        for (k, source), matrix in sorted(
            matrices.items(), key=lambda item: (item[0][0], item[0][1].sort_key())
        ):
            generators.append(
                {
                    "direction": direction,
                    "vertex": cd.vertices[k],
                    "source": str(source),
                    "matrix": linalg.to_text(matrix),
                }
            )
    return {
        "format": FORMAT,
        "version": VERSION,
        "graph": graph,
        "w": list(module.w),
        "depth_limit": module.depth_limit,
        "truncated": module.truncated,
        "weights": weights,
        "generators": generators,
    }


def dumps_module(module: IntegrableModule) -> str:
    return json.dumps(module_to_json(module), sort_keys=True, indent=1) + "\n"


def save_module(module: IntegrableModule, path: Union[str, Path]):
    Path(path).write_text(dumps_module(module))
    logger.info("Saved V(%s) to %s.", module.highest_weight, path)


def _require(data: dict, key: str, source: str):
    if key not in data:
        raise ModuleFormatError(f"{source}: missing field {key!r}.")
    return data[key]


def module_from_json(data: dict, source: str = "<module>") -> IntegrableModule:
    if not isinstance(data, dict) or data.get("format") != FORMAT:
        raise ModuleFormatError(f"{source}: not a {FORMAT} file.")
    if data.get("version") != VERSION:
        raise ModuleFormatError(f"{source}: unsupported version {data.get('version')!r}.")
    cd, _ = parse_graph(_require(data, "graph", source), source=source)
    w = tuple(int(a) for a in _require(data, "w", source))
    try:
        support, labels, gram = {}, {}, {}
        for entry in _require(data, "weights", source):
            weight = Weight.parse(entry["weight"])
            dim = int(entry["dim"])
            if weight.w != w or len(entry["labels"]) != dim:
                raise ModuleFormatError(f"{source}: inconsistent weight entry {entry['weight']}.")
            support[weight] = dim
            labels[weight] = tuple(entry["labels"])
            gram[weight] = linalg.from_text(entry["gram"], (dim, dim))
        e_matrices, f_matrices = {}, {}
        for entry in _require(data, "generators", source):
            direction = entry["direction"]
            if direction not in ("E", "F"):
                raise ModuleFormatError(f"{source}: unknown generator direction {direction!r}.")
            k = cd.index(entry["vertex"])
            weight = Weight.parse(entry["source"])
            target = weight.plus_root(k, 1 if direction == "E" else -1)
            shape = (support.get(target, 0), support.get(weight, 0))
            matrix = linalg.from_text(entry["matrix"], shape) if all(shape) else linalg.zeros(*shape)
            (e_matrices if direction == "E" else f_matrices)[(k, weight)] = matrix
    except (KeyError, TypeError) as e:
        raise ModuleFormatError(f"{source}: malformed module data ({e}).") from None
    except ValueError as e:
        if isinstance(e, ModuleFormatError):
            raise
        raise ModuleFormatError(f"{source}: {e}") from None
    return IntegrableModule(
        cartan=cd,
        w=w,
        depth_limit=int(_require(data, "depth_limit", source)),
        truncated=bool(_require(data, "truncated", source)),
        support=support,
        labels=labels,
        e_matrices=e_matrices,
        f_matrices=f_matrices,
        gram=gram,
    )


def load_module(path: Union[str, Path]) -> IntegrableModule:
    """Read a module written by :func:`save_module`.

    The matrices are taken as they are; nothing is recomputed, so a corrupted file is
    caught by the relation suite rather than here."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ModuleFormatError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from None
    return module_from_json(data, source=str(path))


def matrices_equal(a: IntegrableModule, b: IntegrableModule) -> bool:
    "Whether two modules have the same support, labels and generator matrices."
    if a.support != b.support or a.labels != b.labels:
        return False
    for mine, theirs in ((a.e_matrices, b.e_matrices), (a.f_matrices, b.f_matrices)):
        if set(mine) != set(theirs):
            return False
        if not all(np.shape(mine[key]) == np.shape(theirs[key]) and linalg.equal(mine[key], theirs[key]) for key in mine):
            return False
    return True
