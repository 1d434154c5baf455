"""Cartan data, weights and root-system bookkeeping for simply-laced graphs.

A finite graph without loops determines a symmetric Cartan matrix C with 2 on the
diagonal and -1 for every edge (:func:`~decat.core.cartan.build_cartan`). All weights
used by decat have the form

    lambda = Lambda_w - alpha_v

for a nonnegative framing vector w and an integer vector v, and are represented by
:class:`~decat.core.cartan.Weight`. The basic pairing is

    <lambda, alpha_i> = w_i - (C v)_i

(:func:`~decat.core.cartan.pair`), and the simple reflection adds this number to v_i
(:func:`~decat.core.cartan.reflect`). For finite-type graphs,
:mod:`decat.core.weyl` provides positive roots, lowest weights and the Weyl dimension
formula, which the rest of the package uses as independent oracles.
"""

from decat.core.cartan import (
    CartanData,
    GraphData,
    Weight,
    build_cartan,
    framing_pairing,
    load_graph,
    neighbor_sum,
    pair,
    pairings,
    parse_framing,
    parse_graph,
    reflect,
    symmetric_pairing,
)
from decat.core.weyl import (
    dominant_conjugate,
    height,
    is_finite_type,
    lowest_weight,
    positive_roots,
    weyl_dimension,
)

__all__ = [
    "CartanData",
    "GraphData",
    "Weight",
    "build_cartan",
    "framing_pairing",
    "load_graph",
    "neighbor_sum",
    "pair",
    "pairings",
    "parse_framing",
    "parse_graph",
    "reflect",
    "symmetric_pairing",
    "dominant_conjugate",
    "height",
    "is_finite_type",
    "lowest_weight",
    "positive_roots",
    "weyl_dimension",
]
