"""Simply-laced Cartan data built from a finite loop-free graph.

Weights are stored in (w, v) coordinates: a :class:`Weight` with framing vector w and
root vector v stands for lambda = Lambda_w - alpha_v. Every pairing decat needs factors
through these coordinates, so no realization of the full weight lattice is chosen.

>>> graph = GraphData(("a", "b", "c"), (("a", "b"), ("b", "c")))
>>> cd = build_cartan(graph)
>>> cd.cartan_matrix.tolist()
[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
>>> lam = Weight((1, 0, 0), (0, 0, 0))
>>> pair(cd, lam, "a"), pair(cd, lam, "b")
(1, 0)
>>> print(reflect(cd, lam, "a"))
w=1,0,0;v=1,0,0
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from decat.errors import GraphValidationError, ModuleFormatError, UnknownVertexError

Vertex = Union[str, int]  # A vertex identifier, or its position in the vertex list.
Edge = Tuple[str, str]


@dataclass(frozen=True)
class GraphData:
    """A finite graph (I, E) with an optional orientation Omega.

    The oriented double H contains both directions of every edge. The sign epsilon(h) is
    +1 on Omega and -1 on the reversed edges."""

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = ()
    orientation: Optional[Tuple[Edge, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self, "edges", tuple((str(a), str(b)) for a, b in self.edges)
        )
        if self.orientation is not None:
            object.__setattr__(
                self, "orientation", tuple((str(a), str(b)) for a, b in self.orientation)
            )

    def validate(self):
        "Raise GraphValidationError naming the first violated invariant."
        if not self.vertices:
            raise GraphValidationError("The graph must have at least one vertex.")
        if len(set(self.vertices)) != len(self.vertices):
            duplicates = sorted({v for v in self.vertices if self.vertices.count(v) > 1})
            raise GraphValidationError(f"Duplicate vertex identifiers: {duplicates}.")
        seen = set()
        for a, b in self.edges:
            for endpoint in (a, b):
                if endpoint not in self.vertices:
                    raise GraphValidationError(
                        f"Edge ({a}, {b}) refers to unknown vertex {endpoint!r}."
                    )
            if a == b:
                raise GraphValidationError(f"Edge ({a}, {b}) is a loop.")
            key = frozenset((a, b))
            if key in seen:
                raise GraphValidationError(f"Edge ({a}, {b}) appears more than once.")
            seen.add(key)
        if self.orientation is not None:
            oriented = [frozenset(h) for h in self.orientation]
            if len(self.orientation) != len(self.edges) or set(oriented) != seen:
                raise GraphValidationError(
                    "The orientation must contain exactly one direction of each edge."
                )
            if len(set(oriented)) != len(oriented):
                raise GraphValidationError("The orientation repeats an edge.")

    @property
    def half_edges(self) -> Tuple[Edge, ...]:
        "The oriented double H, as (out, in) pairs, in edge order."
        return tuple(h for a, b in self.edges for h in ((a, b), (b, a)))

    @staticmethod
    def out_vertex(h: Edge) -> str:
        return h[0]

    @staticmethod
    def in_vertex(h: Edge) -> str:
        return h[1]

    def epsilon(self, h: Edge) -> int:
        """+1 on the orientation Omega, -1 on its complement in H.

        The default orientation (when none is given) is the edge list as written."""
        omega = self.orientation if self.orientation is not None else self.edges
        if tuple(h) in omega:
            return 1
        if (h[1], h[0]) in omega:
            return -1
        raise GraphValidationError(f"{h} is not an oriented edge of the graph.")

    def neighbors(self, vertex: str) -> List[str]:
        "Neighbors of a vertex, in vertex order."
        adjacent = {b for a, b in self.edges if a == vertex}
        adjacent |= {a for a, b in self.edges if b == vertex}
        return [v for v in self.vertices if v in adjacent]


@dataclass(frozen=True, eq=False)
class CartanData:
    graph: GraphData
    cartan_matrix: np.ndarray = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.graph.vertices)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.graph.vertices

    def index(self, vertex: Vertex) -> int:
        "Position of a vertex given by identifier (str) or position (int)."
        if isinstance(vertex, (int, np.integer)) and not isinstance(vertex, bool):
            if 0 <= vertex < self.rank:
                return int(vertex)
            raise UnknownVertexError(
                f"Vertex index {vertex} out of range for a graph with {self.rank} vertices."
            )
        try:
            return self.graph.vertices.index(str(vertex))
        except ValueError:
            raise UnknownVertexError(
                f"Unknown vertex {vertex!r}; vertices are {list(self.graph.vertices)}."
            ) from None

    def entry(self, i: Vertex, j: Vertex) -> int:
        return int(self.cartan_matrix[self.index(i), self.index(j)])

    def unit(self, i: Vertex) -> Tuple[int, ...]:
        "The coordinate vector e_i."
        k = self.index(i)
        return tuple(int(k == j) for j in range(self.rank))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CartanData):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)


@dataclass(frozen=True, order=True)
class Weight:
    """lambda = Lambda_w - alpha_v in (w, v) coordinates."""

    w: Tuple[int, ...]
    v: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(a) for a in self.w))
        object.__setattr__(self, "v", tuple(int(a) for a in self.v))
        if len(self.w) != len(self.v):
            raise ValueError(
                f"w and v must have the same length, got {len(self.w)} and {len(self.v)}."
            )

    @classmethod
    def highest(cls, w: Sequence[int]) -> "Weight":
        return cls(tuple(w), (0,) * len(w))

    @property
    def height(self) -> int:
        "Sum of the v-coordinates (the depth below the highest weight)."
        return sum(self.v)

    def shifted(self, dv: Sequence[int]) -> "Weight":
        "The weight with v replaced by v + dv (so lambda - alpha_dv)."
        return Weight(self.w, tuple(a + b for a, b in zip(self.v, dv)))

    def plus_root(self, i: int, r: int = 1) -> "Weight":
        "lambda + r alpha_i, for a vertex position i."
        v = list(self.v)
        v[i] -= r
        return Weight(self.w, tuple(v))

    @property
    def label(self) -> str:
        return "w=" + ",".join(map(str, self.w)) + ";v=" + ",".join(map(str, self.v))

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Inverse of :attr:`label`.

        >>> Weight.parse("w=1,0;v=0,1")
        Weight(w=(1, 0), v=(0, 1))
        """
        try:
            w_part, v_part = text.strip().split(";")
            if not (w_part.startswith("w=") and v_part.startswith("v=")):
                raise ValueError
            return cls(
                tuple(int(a) for a in w_part[2:].split(",")),
                tuple(int(a) for a in v_part[2:].split(",")),
            )
        except ValueError:
            raise ValueError(f"Malformed weight {text!r}; expected 'w=..;v=..'.") from None

    def sort_key(self) -> tuple:
        "Deterministic ordering: by height, then lexicographically by v."
        return (self.height, self.v)


def build_cartan(graph: GraphData) -> CartanData:
    "Validate the graph and build its Cartan matrix C = 2 - adjacency."
    graph.validate()
    n = len(graph.vertices)
    matrix = 2 * np.eye(n, dtype=int)
    for a, b in graph.edges:
        i, j = graph.vertices.index(a), graph.vertices.index(b)
        matrix[i, j] = matrix[j, i] = -1
    matrix.setflags(write=False)
    return CartanData(graph, matrix)


def _check_weight(cd: CartanData, weight: Weight):
    if len(weight.w) != cd.rank:
        raise ValueError(
            f"Weight {weight} has {len(weight.w)} coordinates, expected {cd.rank}."
        )


def pair(cd: CartanData, weight: Weight, i: Vertex) -> int:
    "<lambda, alpha_i> = w_i - (C v)_i."
    k = cd.index(i)
    _check_weight(cd, weight)
    return weight.w[k] - int(np.dot(cd.cartan_matrix[k], weight.v))


def pairings(cd: CartanData, weight: Weight) -> Tuple[int, ...]:
    "(<lambda, alpha_i>)_i for all vertices."
    return tuple(pair(cd, weight, i) for i in range(cd.rank))


def reflect(cd: CartanData, weight: Weight, i: Vertex) -> Weight:
    "The simple reflection s_i(lambda) = lambda - <lambda, alpha_i> alpha_i."
    k = cd.index(i)
    n = pair(cd, weight, k)
    v = list(weight.v)
    v[k] += n
    return Weight(weight.w, tuple(v))


def neighbor_sum(cd: CartanData, weight: Weight, i: Vertex) -> int:
    "N_i = w_i + sum of v over the neighbors of i."
    k = cd.index(i)
    _check_weight(cd, weight)
    vertex = cd.vertices[k]
    return weight.w[k] + sum(
        weight.v[cd.index(j)] for j in cd.graph.neighbors(vertex)
    )


def symmetric_pairing(cd: CartanData, a: Sequence[int], b: Sequence[int]) -> int:
    "<alpha_a, alpha_b> = a^T C b."
    return int(np.dot(a, np.dot(cd.cartan_matrix, b)))


def framing_pairing(w: Sequence[int], v: Sequence[int]) -> int:
    "<Lambda_w, alpha_v> = w . v."
    return int(np.dot(w, v))


def load_graph(path: Union[str, Path]) -> Tuple[CartanData, Optional[Tuple[int, ...]]]:
    """Read a graph file and return its Cartan data and the optional framing w.

    The format is ``{"vertices": [...], "edges": [[a, b], ...], "orientation": [...],
    "w": {vertex: int}}`` where ``orientation`` and ``w`` are optional."""
    path = Path(path)
    text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModuleFormatError(
            f"{path}: line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    return parse_graph(data, source=str(path))


def parse_graph(
    data: dict, source: str = "<graph>"
) -> Tuple[CartanData, Optional[Tuple[int, ...]]]:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ModuleFormatError(f"{source}: a graph needs a 'vertices' list.")
    edges = [tuple(e) for e in data.get("edges", [])]
    orientation = [tuple(h) for h in data.get("orientation", [])]
    for e in edges + orientation:
        if len(e) != 2:
            raise GraphValidationError(f"{source}: edge {list(e)} must have two endpoints.")
    graph = GraphData(
        tuple(data["vertices"]),
        tuple(edges),
        tuple(orientation) if "orientation" in data else None,
    )
    cd = build_cartan(graph)
    w = None
    if "w" in data:
        w = parse_framing(cd, data["w"])
    return cd, w


def parse_framing(cd: CartanData, w: Union[Dict[str, int], Iterable[int], str]) -> Tuple[int, ...]:
    """Read a framing vector given as a vertex map, a sequence, or "1,0,2" text.

    >>> cd = build_cartan(GraphData(("a", "b"), (("a", "b"),)))
    >>> parse_framing(cd, {"b": 2}), parse_framing(cd, "1,0")
    ((0, 2), (1, 0))
    """
    if isinstance(w, str):
        w = [int(a) for a in w.split(",")]
    if isinstance(w, dict):
        vector = [0] * cd.rank
        for vertex, value in w.items():
            vector[cd.index(str(vertex))] = int(value)
    else:
        vector = [int(a) for a in w]
    if len(vector) != cd.rank:
        raise ValueError(f"Framing {vector} has {len(vector)} entries, expected {cd.rank}.")
    if any(a < 0 for a in vector):
        raise ValueError(f"Framing {vector} must be nonnegative.")
    return tuple(vector)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
