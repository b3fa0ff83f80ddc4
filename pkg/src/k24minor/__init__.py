"""Recognition of K_{2,4}-minor-free graphs with checkable certificates."""

from .catalog import (
    CatalogEntry,
    FamilySpec,
    build_family,
    catalog_entry,
    catalog_ids,
    enumerate_3connected,
    in_class_G,
    match_catalog,
    maximal_subdividable_sets,
    named_graph,
)
from .core_graph import Graph, GraphError, GraphFormatError, blocks, emit_graph6, is_k_connected, parse_graph6, read_graphs
from .hamilton import HamiltonCertificate, hamilton_cycle_3conn, hamilton_path_2conn, verify_hamilton
from .iso import are_isomorphic
from .minor_oracle import OracleBudgetExceeded, StandardMinorModel, find_k2t_minor, find_rooted_k2t_minor, verify_model
from .outerplanar import OuterWitness, is_outerplanar, is_xy_outerplanar, verify_witness
from .recognizer import (
    Certificate,
    HasK24Minor,
    find_apex_set,
    find_minor_model,
    is_k24_free,
    is_planar_k24free,
    recognize,
    verify_certificate,
)

__all__ = [
    "Graph",
    "GraphError",
    "GraphFormatError",
    "parse_graph6",
    "emit_graph6",
    "read_graphs",
    "blocks",
    "is_k_connected",
    "are_isomorphic",
    "StandardMinorModel",
    "OracleBudgetExceeded",
    "find_k2t_minor",
    "find_rooted_k2t_minor",
    "verify_model",
    "OuterWitness",
    "is_outerplanar",
    "is_xy_outerplanar",
    "verify_witness",
    "FamilySpec",
    "CatalogEntry",
    "build_family",
    "in_class_G",
    "named_graph",
    "catalog_entry",
    "catalog_ids",
    "enumerate_3connected",
    "match_catalog",
    "maximal_subdividable_sets",
    "Certificate",
    "HasK24Minor",
    "recognize",
    "verify_certificate",
    "is_k24_free",
    "find_minor_model",
    "find_apex_set",
    "is_planar_k24free",
    "HamiltonCertificate",
    "hamilton_cycle_3conn",
    "hamilton_path_2conn",
    "verify_hamilton",
]
