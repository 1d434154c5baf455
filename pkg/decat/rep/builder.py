"""Construction of the irreducible module V(Lambda_w) with exact generator matrices.

The module is built one depth (height of v) at a time. Every vector of M(lambda) is a
combination of f-monomials applied to the highest-weight vector, so the candidates for
a spanning set of M(lambda) are f_i b for the basis vectors b of the parent spaces
M(lambda + alpha_i). In the irreducible module a vector below the top is zero exactly
when every e_j kills it, so a candidate is identified with its *signature*, the list
of vectors e_j c in M(lambda + alpha_j), which can be computed from what is already
known with the commutation relation

    e_j f_i b = f_i e_j b - delta_ij [<mu, alpha_i>] b,      mu = lambda + alpha_i.

(This is the sign convention under which (f_i e_i - e_i f_i) a_lambda =
[<lambda, alpha_i>] a_lambda.) The basis of M(lambda) is the first maximal set of
candidates with independent signatures, in the order described at
:func:`candidate_key`; the e-matrices are the signatures of the basis, and the
f-matrices into M(lambda) are obtained by solving for the coordinates of every
candidate.

Labels record the monomials with divided powers, e.g. ``F1^(2) F2 v``: prepending f_i
to a monomial that already starts with f_i^(m) gives [m+1] f_i^(m+1), and the
candidate is rescaled by 1/[m+1] so that it stays a divided-power monomial.

The contravariant form with f_i^dagger = -e_i is computed alongside. It must be
nondegenerate on every weight space, and positive definite at q = 1.
"""

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from decat.core.cartan import CartanData, Weight, pair
from decat.core.weyl import height, is_finite_type
from decat.errors import InternalConsistencyError
from decat.qlaurent import linalg
from decat.qlaurent.fraction import QFraction
from decat.qlaurent.laurent import ONE
from decat.qlaurent.quantum import qint
from decat.rep.module import IntegrableModule
from decat.util.parallel import ordered_map

logger = logging.getLogger(__name__)

TOP_LABEL = "v"

Run = Tuple[int, int]  # (vertex position, divided power)


def label_text(cd: CartanData, runs: Sequence[Run]) -> str:
    "Text form of a divided-power monomial, e.g. 'F1^(2) F0 v'."
    letters = []
    for vertex, power in runs:
        name = cd.vertices[vertex]
        letters.append(f"F{name}" if power == 1 else f"F{name}^({power})")
    return " ".join(letters + [TOP_LABEL])


def prepend(runs: Tuple[Run, ...], i: int) -> Tuple[Tuple[Run, ...], int]:
    """The runs of f_i applied to a monomial, and the power m+1 of its new first run
    (the candidate is f_i b / [m+1])."""
    if runs and runs[0][0] == i:
        m = runs[0][1]
        return ((i, m + 1),) + runs[1:], m + 1
    return ((i, 1),) + runs, 1


def candidate_key(runs: Sequence[Run]) -> Tuple[int, ...]:
    """Candidates are ordered by their letters in the order they are applied, i.e. the
    reversed letter sequence of the monomial, compared lexicographically."""
    letters = []
    for vertex, power in runs:
        letters.extend([vertex] * power)
    return tuple(reversed(letters))


@dataclass
class _Space:
    "One weight space while the module is being built."

    weight: Weight
    runs: List[Tuple[Run, ...]]
    gram: np.ndarray


@dataclass
class _Candidate:
    parent: Weight
    column: int
    vertex: int
    runs: Tuple[Run, ...]
    scale: QFraction
    signature: List[QFraction]  # of f_i b (unscaled)


class _Builder:
    def __init__(self, cd: CartanData, w: Tuple[int, ...]):
        self.cd = cd
        self.w = w
        top = Weight.highest(w)
        self.spaces: Dict[Weight, _Space] = {top: _Space(top, [()], linalg.identity(1))}
        self.e_matrices: Dict[Tuple[int, Weight], np.ndarray] = {}
        self.f_matrices: Dict[Tuple[int, Weight], np.ndarray] = {}

    def dim(self, weight: Weight) -> int:
        space = self.spaces.get(weight)
        return len(space.runs) if space else 0

    def e(self, j: int, weight: Weight) -> np.ndarray:
        matrix = self.e_matrices.get((j, weight))
        if matrix is None:
            return linalg.zeros(self.dim(weight.plus_root(j)), self.dim(weight))
        return matrix

    def f(self, i: int, weight: Weight) -> np.ndarray:
        matrix = self.f_matrices.get((i, weight))
        if matrix is None:
            return linalg.zeros(self.dim(weight.plus_root(i, -1)), self.dim(weight))
        return matrix

    def layer_weights(self, depth: int) -> List[Weight]:
        "Weights at the given depth that have a parent in the previous layer."
        found = set()
        for parent in self.spaces:
            if parent.height != depth - 1:
                continue
            for i in range(self.cd.rank):
                found.add(parent.plus_root(i, -1))
        return sorted(found, key=Weight.sort_key)

    def candidates(self, weight: Weight) -> List[_Candidate]:
        result = []
        for i in range(self.cd.rank):
            parent = weight.plus_root(i)
            space = self.spaces.get(parent)
            if space is None:
                continue
            n = pair(self.cd, parent, i)
            for column, runs in enumerate(space.runs):
                new_runs, power = prepend(runs, i)
                signature = []
                for j in range(self.cd.rank):
                    # e_j f_i b = f_i e_j b - delta_ij [<mu, alpha_i>] b
                    above = parent.plus_root(j)
                    e_col = self.e(j, parent)[:, column : column + 1]
                    block = linalg.matmul(self.f(i, above), e_col)
                    values = [linalg.as_qfraction(x) for x in block[:, 0]]
                    if i == j:
                        values[column] = values[column] - QFraction(qint(n))
                    signature.extend(values)
                scale = QFraction(ONE, qint(power))
                result.append(_Candidate(parent, column, i, new_runs, scale, signature))
        return sorted(result, key=lambda c: candidate_key(c.runs))

    def build_space(self, weight: Weight):
        """Choose a basis of M(weight) and return (space, e-matrices, f-matrices), or None
        if the weight space is zero."""
        candidates = self.candidates(weight)
        basis = linalg.IncrementalBasis()
        chosen = []
        for candidate in candidates:
            scaled = [candidate.scale * x for x in candidate.signature]
            if basis.add(scaled):
                chosen.append(candidate)
        if not chosen:
            return None
        signatures = linalg.asmatrix(
            [[c.scale * x for x in c.signature] for c in chosen]
        ).T
        e_blocks = {}
        offset = 0
        for j in range(self.cd.rank):
            size = self.dim(weight.plus_root(j))
            if size:
                e_blocks[j] = signatures[offset : offset + size, :]
            offset += size

        f_blocks = {}
        for i in range(self.cd.rank):
            parent = weight.plus_root(i)
            if parent not in self.spaces:
                continue
            columns = sorted((c for c in candidates if c.vertex == i), key=lambda c: c.column)
            rhs = linalg.asmatrix([c.signature for c in columns]).T
            f_blocks[i] = linalg.solve(signatures, rhs)

        gram = self.gram(weight, chosen, e_blocks)
        space = _Space(weight, [c.runs for c in chosen], gram)
        return space, e_blocks, f_blocks

    def gram(self, weight: Weight, chosen: List[_Candidate], e_blocks) -> np.ndarray:
        "<c, b'> = -scale <b_k, e_i b'> for the basis candidates c = scale f_i b_k."
        rows = []
        for candidate in chosen:
            parent_gram = self.spaces[candidate.parent].gram
            e_i = e_blocks[candidate.vertex]
            row = linalg.matmul(parent_gram[candidate.column : candidate.column + 1, :], e_i)
            rows.append([-candidate.scale * x for x in row[0]])
        gram = linalg.asmatrix(rows)
        if linalg.determinant(gram).is_zero():
            raise InternalConsistencyError(f"The contravariant form on M({weight}) is degenerate.")
        _check_positive_at_one(weight, gram)
        return gram


def _check_positive_at_one(weight: Weight, gram: np.ndarray):
    try:
        at_one = linalg.evaluate(gram, Fraction(1))
    except ZeroDivisionError:
        logger.debug("Gram matrix at %s is not regular at q=1; skipping the positivity check.", weight)
        return
    if not linalg.is_positive_definite(at_one.tolist()):
        raise InternalConsistencyError(
            f"The contravariant form on M({weight}) is not positive definite at q=1."
        )


def build_module(
    cd: CartanData, w: Sequence[int], depth_limit: Optional[int] = None, jobs: Optional[int] = None
) -> IntegrableModule:
    """Build V(Lambda_w) down to depth ``depth_limit`` (the full module by default).

    For finite-type graphs the default depth is the height of the lowest weight. For
    other graphs a depth limit is required and the module comes out truncated. A module
    is complete when the layer below the depth limit turns out to be empty.

    Weight spaces of one depth are built independently, on up to ``jobs`` threads.

    >>> from decat.core.cartan import GraphData, build_cartan
    >>> a2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))
    >>> module = build_module(a2, (1, 0))
    >>> [(str(weight), module.dim(weight)) for weight in module.weights]
    [('w=1,0;v=0,0', 1), ('w=1,0;v=1,0', 1), ('w=1,0;v=1,1', 1)]
    >>> module.labels[Weight((1, 0), (1, 1))]
    ('F2 F1 v',)
    """
    w = tuple(int(a) for a in w)
    if len(w) != cd.rank:
        raise ValueError(f"The framing {w} has {len(w)} entries, expected {cd.rank}.")
    if any(a < 0 for a in w) or not any(w):
        raise ValueError(f"The framing must be nonnegative and nonzero, got {w}.")
    if depth_limit is None:
        if not is_finite_type(cd):
            raise ValueError("A depth limit is required for graphs that are not of finite type.")
        depth_limit = height(cd, w)
    if depth_limit < 0:
        raise ValueError(f"The depth limit must be nonnegative, got {depth_limit}.")

    builder = _Builder(cd, w)
    truncated = False
    depth = 1
    while True:
        weights = builder.layer_weights(depth)
        results = ordered_map(builder.build_space, weights, jobs=jobs)
        layer = [(weight, result) for weight, result in zip(weights, results) if result]
        if depth > depth_limit:
            truncated = bool(layer)
            break
        if not layer:
            break
        for weight, (space, e_blocks, f_blocks) in layer:
            builder.spaces[weight] = space
            for j, matrix in e_blocks.items():
                builder.e_matrices[(j, weight)] = matrix
            for i, matrix in f_blocks.items():
                builder.f_matrices[(i, weight.plus_root(i))] = matrix
        logger.debug(
            "Depth %d: %s", depth, {str(weight): len(space.runs) for weight, (space, _, _) in layer}
        )
        depth += 1

    if truncated:
        warnings.warn(
            f"V({Weight.highest(w)}) was truncated at depth {depth_limit}; relations are only "
            "checked on the interior weights."
        )
    weights = sorted(builder.spaces, key=Weight.sort_key)
    logger.info(
        "Built V(%s): %d weights, total dimension %d%s.",
        Weight.highest(w),
        len(weights),
        sum(builder.dim(weight) for weight in weights),
        " (truncated)" if truncated else "",
    )
    return IntegrableModule(
        cartan=cd,
        w=w,
        depth_limit=depth_limit,
        truncated=truncated,
        support={weight: builder.dim(weight) for weight in weights},
        labels={
            weight: tuple(label_text(cd, runs) for runs in builder.spaces[weight].runs)
            for weight in weights
        },
        e_matrices=builder.e_matrices,
        f_matrices=builder.f_matrices,
        gram={weight: builder.spaces[weight].gram for weight in weights},
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
