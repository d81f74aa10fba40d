from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Mapping, Optional

from matchgames.errors import InputError
from matchgames.graph import Edge, Graph, triangles
from matchgames.utils import content_lines, format_rational, parse_int, parse_rational

from .simplex import LinearProgram, Optimal, solve_lp

logger = logging.getLogger("matchgames.exact.fractional")


@dataclass(frozen=True)
class FractionalMatching:
    """
    Edge weights in [0, 1] on ``graph`` summing to exactly 1 at every vertex.
    ``weights`` holds every edge of the graph, zero weights included.
    """
    graph: Graph
    weights: Mapping[Edge, Fraction]

    def __post_init__(self):
        weights: Dict[Edge, Fraction] = {e: Fraction(0) for e in self.graph.edges}
        for (u, v), w in self.weights.items():
            e = (min(u, v), max(u, v))
            if e not in weights:
                raise InputError(f"{e} is not an edge of the graph")
            w = Fraction(w)
            if not 0 <= w <= 1:
                raise InputError(f"weight {w} on {e} outside [0, 1]")
            weights[e] = w
        for v in range(self.graph.n):
            total = self.vertex_sum_of(weights, v)
            if total != 1:
                raise InputError(f"weights at vertex {v} sum to {total}, not 1")
        object.__setattr__(self, "weights", weights)

    def vertex_sum_of(self, weights: Mapping[Edge, Fraction], v: int) -> Fraction:
        return sum((weights[self.graph.edges[i]] for i in self.graph.incident_edges(v)), Fraction(0))

    def weight(self, u: int, v: int) -> Fraction:
        return self.weights.get((min(u, v), max(u, v)), Fraction(0))

    def triangle_excess(self) -> Optional[tuple]:
        """The first triangle whose weights sum above 1, or ``None``."""
        for u, v, w in triangles(self.graph):
            if self.weight(u, v) + self.weight(v, w) + self.weight(u, w) > 1:
                return (u, v, w)
        return None

    def avoids_triangles(self) -> bool:
        return self.triangle_excess() is None

    @property
    def scale(self) -> int:
        """Least common multiple of the weight denominators."""
        return lcm(1, *(w.denominator for w in self.weights.values()))

    def is_integral(self) -> bool:
        return self.scale == 1

    def to_text(self) -> str:
        lines = [f"fpm {self.graph.n}"]
        lines += [f"{u} {v} {format_rational(w)}" for (u, v), w in self.weights.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, g: Graph, text: str) -> "FractionalMatching":
        lines = list(content_lines(text))
        if not lines or lines[0][1][0] != "fpm" or len(lines[0][1]) != 2:
            raise InputError("expected header 'fpm <n>'")
        if parse_int(lines[0][1][1], lines[0][0]) != g.n:
            raise InputError("fractional matching was written for a different vertex count")
        weights = {}
        for no, tokens in lines[1:]:
            if len(tokens) != 3:
                raise InputError(f"line {no}: expected 'u v num/den'")
            weights[(parse_int(tokens[0], no), parse_int(tokens[1], no))] = parse_rational(tokens[2], no)
        return cls(g, weights)


def fpm_program(g: Graph, avoid_triangles: bool = False) -> LinearProgram:
    """
    One variable per edge with a per-vertex equality; the upper bounds ``f(e) <= 1``
    follow from the equalities and are not added as rows.
    """
    constraints = [({i: 1 for i in g.incident_edges(v)}, "=", 1) for v in range(g.n)]
    if avoid_triangles:
        for u, v, w in triangles(g):
            edges = (g.edge_index(u, v), g.edge_index(v, w), g.edge_index(u, w))
            constraints.append(({i: 1 for i in edges}, "<=", 1))
    return LinearProgram.build(g.m, {}, constraints)


def _solve(g: Graph, avoid_triangles: bool) -> Optional[FractionalMatching]:
    result = solve_lp(fpm_program(g, avoid_triangles))
    if not isinstance(result, Optimal):
        return None
    return FractionalMatching(g, dict(zip(g.edges, result.point)))


def fractional_pm(g: Graph) -> Optional[FractionalMatching]:
    return _solve(g, avoid_triangles=False)


def triangle_avoiding_fpm(g: Graph) -> Optional[FractionalMatching]:
    return _solve(g, avoid_triangles=True)


def explore_half_integral(g: Graph) -> Optional[FractionalMatching]:
    """
    Backtracking search for a triangle-avoiding fractional perfect matching with
    every weight in {0, 1/2, 1}. Exploratory: a miss here says nothing about
    general triangle-avoiding matchings.
    """
    # work in halves: edge values 0, 1, 2; every vertex must reach exactly 2
    edge_list = list(g.edges)
    load = [0] * g.n
    remaining = [g.degree(v) for v in range(g.n)]
    tris = triangles(g)
    tris_of_edge: List[List[tuple]] = [[] for _ in edge_list]
    for t in tris:
        u, v, w = t
        for e in ((u, v), (v, w), (u, w)):
            tris_of_edge[g.edge_index(*e)].append(t)
    value: Dict[Edge, int] = {}

    def triangle_ok(t) -> bool:
        u, v, w = t
        return sum(value.get(e, 0) for e in ((u, v), (v, w), (u, w))) <= 2

    def search(i: int) -> bool:
        if i == len(edge_list):
            return all(x == 2 for x in load)
        u, v = edge_list[i]
        remaining[u] -= 1
        remaining[v] -= 1
        for h in (2, 1, 0):
            if load[u] + h > 2 or load[v] + h > 2:
                continue
            load[u] += h
            load[v] += h
            value[(u, v)] = h
            closed = (remaining[u] > 0 or load[u] == 2) and (remaining[v] > 0 or load[v] == 2)
            if closed and all(triangle_ok(t) for t in tris_of_edge[i]) and search(i + 1):
                return True
            load[u] -= h
            load[v] -= h
            del value[(u, v)]
        remaining[u] += 1
        remaining[v] += 1
        return False

    if any(g.degree(v) == 0 for v in range(g.n)):
        return None
    if not search(0):
        logger.debug("no half-integral triangle-avoiding matching for %d vertices", g.n)
        return None
    return FractionalMatching(g, {e: Fraction(h, 2) for e, h in value.items()})
