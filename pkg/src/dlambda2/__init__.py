"""Decide lambda_2(D(G)) < -1/2 for connected graphs, exactly and structurally."""

from ._core import BACKEND
from .classifier import Classification, Reason, Verdict, classify_structural, cross_validate, validate_certificate
from .graph import DisconnectedGraph, Graph, GraphError, parse_graph6, to_graph6
from .spectral import decide_lambda2_lt_neg_half_exact, distance_charpoly, distance_spectrum, lambda2

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Classification",
    "DisconnectedGraph",
    "Graph",
    "GraphError",
    "Reason",
    "Verdict",
    "classify_structural",
    "cross_validate",
    "decide_lambda2_lt_neg_half_exact",
    "distance_charpoly",
    "distance_spectrum",
    "lambda2",
    "parse_graph6",
    "to_graph6",
    "validate_certificate",
    "__version__",
]
