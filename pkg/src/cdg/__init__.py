"""Classify small graphs as prime character degree graphs of solvable groups."""

from .admissibility import (
    check_hypothesis_28,
    check_lemma_24,
    check_lemma_27,
    vertex_admissible,
    vertex_strongly_admissible,
)
from .canonical import CanonicalKey, canonical_form, canonical_labeling, is_isomorphic
from .classifier import ClassificationReport, classify, classify_all, explain
from .constructions import (
    degree_set_to_graph,
    field_construction_degrees,
    join_graphs,
    search_field_certificate,
)
from .enumerate import enumerate_graphs, filter_universe
from .fixtures import fixture, fixture_names
from .graph import (
    Graph,
    complement,
    delete_edges,
    diameter,
    graph_from_edge_list,
    induced_subgraph,
    parse_cdg1,
    format_cdg1,
)
from .kb import KnowledgeBase, kb_load, kb_lookup, kb_seed, kb_store, verify_kb
from .records import Verdict, VerdictRecord
from .rules import (
    bissler_family,
    complement_odd_cycle,
    diameter_three_rule,
    disconnected_shape,
    join_decompose,
    palfy_violation,
)

__version__ = "0.1.0"
