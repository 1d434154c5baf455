from fractions import Fraction

from hypothesis import strategies as st

from decat.core.cartan import GraphData, Weight, build_cartan
from decat.qlaurent import QLaurent


def laurents(max_terms: int = 4, max_exponent: int = 5):
    "Generate Laurent polynomials with small integer coefficients."
    return st.dictionaries(
        st.integers(-max_exponent, max_exponent),
        st.integers(-5, 5).map(Fraction),
        max_size=max_terms,
    ).map(QLaurent)


@st.composite
def trees(draw, max_vertices: int = 4):
    "Generate Cartan data of trees (so simply-laced and loop-free) on 1..max_vertices vertices."
    n = draw(st.integers(1, max_vertices))
    vertices = tuple(str(i + 1) for i in range(n))
    edges = tuple((vertices[draw(st.integers(0, i - 1))], vertices[i]) for i in range(1, n))
    return build_cartan(GraphData(vertices, edges))


@st.composite
def graphs_with_weights(draw, max_vertices: int = 4, max_entry: int = 3):
    "Generate (cd, weight, vertex index, r) with arbitrary nonnegative w and v."
    cd = draw(trees(max_vertices))
    entries = st.lists(st.integers(0, max_entry), min_size=cd.rank, max_size=cd.rank)
    weight = Weight(tuple(draw(entries)), tuple(draw(entries)))
    i = draw(st.integers(0, cd.rank - 1))
    r = draw(st.integers(1, 3))
    return cd, weight, i, r
