"""Exact classification of distinguished and principal nilpotent pairs in the
classical simple Lie algebras, driven by skew-graph combinatorics."""

from .skewgraph import (
    Node,
    Component,
    SkewGraph,
    ShapeClass,
    EnumerationLimitError,
    canonical_form,
    classify_component,
    component_from_nodes,
    enumerate_admissible,
    enumerate_connected,
    graph_from_text,
    graph_to_text,
    is_admissible,
    rectangle_nodes,
    render_ascii,
    validate,
)
from .liealg import (
    AlgebraSpec,
    BasisLabel,
    NotAdmissibleError,
    PairRealization,
    RelationReport,
    algebra_basis,
    build_pair,
    make_spec,
    standard_form,
    verify_relations,
)
from .centralizer import (
    AOperator,
    BiGrading,
    CentralizerReport,
    ClosedFormPrediction,
    NormalFormError,
    analyze,
    bigrade,
    centralizer,
    closed_form_centralizer,
    graph_from_pair,
    is_rectangular_pair,
)
from .catalog import (
    CatalogEntry,
    CatalogVerificationError,
    classify,
    count_orbits,
    export_entries,
    graph_hash,
)

__all__ = [
    "AOperator",
    "AlgebraSpec",
    "BasisLabel",
    "BiGrading",
    "CatalogEntry",
    "CatalogVerificationError",
    "CentralizerReport",
    "ClosedFormPrediction",
    "Component",
    "EnumerationLimitError",
    "Node",
    "NormalFormError",
    "NotAdmissibleError",
    "PairRealization",
    "RelationReport",
    "ShapeClass",
    "SkewGraph",
    "algebra_basis",
    "analyze",
    "bigrade",
    "build_pair",
    "canonical_form",
    "centralizer",
    "classify",
    "classify_component",
    "closed_form_centralizer",
    "component_from_nodes",
    "count_orbits",
    "enumerate_admissible",
    "enumerate_connected",
    "export_entries",
    "graph_from_pair",
    "graph_from_text",
    "graph_hash",
    "graph_to_text",
    "is_admissible",
    "is_rectangular_pair",
    "make_spec",
    "rectangle_nodes",
    "render_ascii",
    "standard_form",
    "validate",
    "verify_relations",
]
__version__ = "0.1.0"
