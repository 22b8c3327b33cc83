"""Exact metric dimension toolkit.

Core pieces: bitmask graphs with BFS distances and graph6 I/O
(:mod:`~metricdim.graph_core`), resolving sets and the exact solver
(:mod:`~metricdim.metric`), twin classes and the typed quotient
(:mod:`~metricdim.twins`), the quotient-based decision of
beta = n - diameter (:mod:`~metricdim.characterize`), minimum/maximum
order constructions (:mod:`~metricdim.extremal`), and the exhaustive
small-graph verification harness (:mod:`~metricdim.enumeration`).
"""

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .graph_core import DistanceMatrix, Graph, parse_graph6, serialize_graph6
from .metric import MetricBasisResult, brute_force_dimension, metric_dimension
from .twins import TwinGraph, TwinKind, twin_graph

__version__ = "0.1.0"

__all__ = [
    "DistanceMatrix",
    "Graph",
    "KERNEL_IMPLEMENTATION",
    "MetricBasisResult",
    "TwinGraph",
    "TwinKind",
    "brute_force_dimension",
    "metric_dimension",
    "parse_graph6",
    "serialize_graph6",
    "twin_graph",
    "__version__",
]
