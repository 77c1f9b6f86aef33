"""Exact tools for equimatchable graphs: matchings, independence, canonical
forms, named families, regular-graph census and structural audits."""

from .canon import CanonicalForm, canonical_labeling, canonicalize, isomorphic
from .classify import (
    EqmVerdict,
    RegularClass,
    audit_isolation_remainders,
    classify_2connected_equimatchable,
    classify_regular,
    is_equimatchable,
    remainder_shape,
)
from .families import FamilySpec, build_family, f_graph, recognize_family
from .graph import Graph, boundary_counts, build_graph, complement, induced_subgraph, profile
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .independence import independence_number, maximum_independent_sets
from .matching import (
    Matching,
    enumerate_maximal_matchings,
    enumerate_minimal_isolating,
    find_augmenting_path,
    find_small_maximal_matching,
    has_perfect_matching,
    is_factor_critical,
    is_isolating,
    is_maximal,
    maximum_matching,
    minimize_isolating,
)

__version__ = "0.1.0"
