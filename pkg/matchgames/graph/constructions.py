from __future__ import annotations

from itertools import combinations
from typing import List, Tuple

from matchgames.errors import PreconditionError

from .structures import BipartiteGraph, Graph, Hypergraph


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is ``g.edges[i]``; adjacency is sharing an endpoint."""
    edges = []
    for v in range(g.n):
        edges.extend(combinations(g.incident_edges(v), 2))
    return Graph.from_edges(g.m, edges)


def hyper_line_graph(h: Hypergraph) -> Graph:
    members = [frozenset(e) for e in h.hyperedges]
    edges = [(i, j) for i, j in combinations(range(h.m), 2) if members[i] & members[j]]
    return Graph.from_edges(h.m, edges)


def double_cover(g: Graph) -> BipartiteGraph:
    """The tensor product ``g x K2``: left copy ``u`` joins right copy ``v`` for every edge ``{u, v}``."""
    edges = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    return BipartiteGraph.from_edges(g.n, g.n, edges)


def triangles(g: Graph) -> List[Tuple[int, int, int]]:
    out = []
    for u, v in g.edges:
        for w in g.neighbors(u) & g.neighbors(v):
            if w > v:
                out.append((u, v, w))
    return sorted(out)


def disjoint_union(g: Graph, copies: int) -> Graph:
    if copies < 1:
        raise PreconditionError(f"copies must be at least 1, got {copies}")
    edges = [(u + k * g.n, v + k * g.n) for k in range(copies) for u, v in g.edges]
    return Graph.from_edges(g.n * copies, edges)


def induced_bipartite(g: BipartiteGraph, lefts, rights) -> BipartiteGraph:
    """Keep the vertex numbering of ``g`` and drop every edge leaving ``lefts x rights``."""
    lefts, rights = frozenset(lefts), frozenset(rights)
    return BipartiteGraph.from_edges(
        g.n_left, g.n_right, [(u, v) for u, v in g.edges if u in lefts and v in rights]
    )
