"""Matching energy of tree complements: exact matching counts, complement
transforms, certified energy comparisons and exhaustive tree sweeps."""

from .complement import NotRealizableError, double_factorial, lovasz_transform
from .energy import (
    EnergyValue,
    QuasiOrderResult,
    Relation,
    energy_interval,
    matching_energy,
    matching_energy_integral,
    matching_roots,
    quasi_compare,
)
from .enumeration import filter_trees, free_trees, parse_predicate
from .families import Family, FamilySpec, build_family, family
from .graph import (
    Graph,
    GraphError,
    canonical_code,
    complement,
    decode_graph6,
    edge_independence_number,
    encode_graph6,
    graph_from_edges,
    pendant_count,
)
from .matchpoly import MatchingPolynomial, MatchingVector, hosoya_index, matching_counts, matching_polynomial
from .transforms import Kind, TransformSpec, apply_transform, check_difference_identity, check_dominance

__version__ = "0.1.0"
