from __future__ import annotations

from typing import Union

from matchgames.errors import InputError
from matchgames.utils import content_lines, parse_int

from .structures import BipartiteGraph, Graph, Hypergraph

AnyGraph = Union[Graph, BipartiteGraph, Hypergraph]


def parse_graph_text(text: str) -> AnyGraph:
    """
    Parse the graph text format::

        graph <n>            | bipartite <nL> <nR>      | hypergraph <n>
        u v                  | l r                      | v1 v2 v3 ...

    one edge per line, ``#`` starts a comment.
    """
    lines = list(content_lines(text))
    if not lines:
        raise InputError("empty graph file")
    lineno, header = lines[0]
    kind = header[0]
    body = lines[1:]

    if kind == "graph":
        if len(header) != 2:
            raise InputError(f"line {lineno}: expected 'graph <n>'")
        n = parse_int(header[1], lineno)
        edges = []
        for no, tokens in body:
            if len(tokens) != 2:
                raise InputError(f"line {no}: expected 'u v'")
            edges.append((parse_int(tokens[0], no), parse_int(tokens[1], no)))
        return Graph.from_edges(n, edges)

    if kind == "bipartite":
        if len(header) != 3:
            raise InputError(f"line {lineno}: expected 'bipartite <nL> <nR>'")
        n_left, n_right = parse_int(header[1], lineno), parse_int(header[2], lineno)
        edges = []
        for no, tokens in body:
            if len(tokens) != 2:
                raise InputError(f"line {no}: expected 'l r'")
            edges.append((parse_int(tokens[0], no), parse_int(tokens[1], no)))
        return BipartiteGraph.from_edges(n_left, n_right, edges)

    if kind == "hypergraph":
        if len(header) != 2:
            raise InputError(f"line {lineno}: expected 'hypergraph <n>'")
        n = parse_int(header[1], lineno)
        hyperedges = [[parse_int(t, no) for t in tokens] for no, tokens in body]
        return Hypergraph.from_sets(n, hyperedges)

    raise InputError(f"line {lineno}: unknown graph kind {kind!r}")


def dump_graph_text(g: AnyGraph) -> str:
    if isinstance(g, Graph):
        lines = [f"graph {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    elif isinstance(g, BipartiteGraph):
        lines = [f"bipartite {g.n_left} {g.n_right}"] + [f"{u} {v}" for u, v in g.edges]
    elif isinstance(g, Hypergraph):
        lines = [f"hypergraph {g.n}"] + [" ".join(str(v) for v in h) for h in g.hyperedges]
    else:
        raise TypeError(f"not a graph: {type(g).__name__}")
    return "\n".join(lines) + "\n"


def load_graph_file(path: str) -> AnyGraph:
    with open(path) as f:
        return parse_graph_text(f.read())
