"""Generation graphs: soluble, abelian, nilpotent, metabelian, metacyclic."""

from .view import (
    INF, Ball, CographResult, GraphView, PredicateKind, dense_diameter,
    find_induced_p4, fmt_value, graph_view,
)

__all__ = [
    "INF", "Ball", "CographResult", "GraphView", "PredicateKind",
    "dense_diameter", "find_induced_p4", "fmt_value", "graph_view",
]
