"""Certified feedback vertex and edge sets for 3-uniform hypergraphs.

The constructive solvers return certificates (deletion set + reduction
trace) that are re-verified against the untouched input before being
handed back; exhaustive oracles provide ground truth on small instances.
"""

from .core import (
    BergeCycle,
    CertificationError,
    ComponentPartition,
    Hypergraph,
    HypergraphError,
    ParseError,
    parse,
    parse_file,
)
from .fes import FesCertificate, greedy_hyperforest, verify_fes
from .fvs import (
    FvsCertificate,
    NotLinearError,
    Rule,
    RuleApplication,
    general_fvs,
    linear_fvs,
    verify_fvs,
)
from .oracle import (
    ExactResult,
    OracleLimitError,
    canonical_form,
    check_half_equality,
    enumerate_linear,
    exact_fes,
    exact_fvs,
    search_extremal,
)

__version__ = "0.1.0"

__all__ = [
    "BergeCycle",
    "CertificationError",
    "ComponentPartition",
    "ExactResult",
    "FesCertificate",
    "FvsCertificate",
    "Hypergraph",
    "HypergraphError",
    "NotLinearError",
    "OracleLimitError",
    "ParseError",
    "Rule",
    "RuleApplication",
    "canonical_form",
    "check_half_equality",
    "enumerate_linear",
    "exact_fes",
    "exact_fvs",
    "general_fvs",
    "greedy_hyperforest",
    "linear_fvs",
    "parse",
    "parse_file",
    "search_extremal",
    "verify_fes",
    "verify_fvs",
    "__version__",
]
