from .structures import BipartiteGraph, Edge, Graph, HallViolator, Hypergraph, Matching
from .constructions import disjoint_union, double_cover, hyper_line_graph, line_graph, triangles
from .matching import (
    Degree2Decomposition,
    SharpReduction,
    degree2_decomposition,
    hyper_perfect_matching,
    independence_number,
    l_perfect_matching,
    maximum_matching,
    sharp_reduction,
)
from .textio import AnyGraph, dump_graph_text, load_graph_file, parse_graph_text

__all__ = [
    "AnyGraph",
    "BipartiteGraph",
    "Degree2Decomposition",
    "Edge",
    "Graph",
    "HallViolator",
    "Hypergraph",
    "Matching",
    "SharpReduction",
    "degree2_decomposition",
    "disjoint_union",
    "double_cover",
    "dump_graph_text",
    "hyper_line_graph",
    "hyper_perfect_matching",
    "independence_number",
    "l_perfect_matching",
    "line_graph",
    "load_graph_file",
    "maximum_matching",
    "parse_graph_text",
    "sharp_reduction",
    "triangles",
]
