from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from matchgames.errors import InputError

Edge = Tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is kept sorted lexicographically; that order is the answer order of
    every game built on the graph and the vertex order of its line graph.
    """
    n: int
    edges: Tuple[Edge, ...]
    _adjacency: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    _edge_index: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        adjacency: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
            adjacency[u].add(v)
            adjacency[v].add(u)
        ordered = tuple(sorted(seen))
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "_adjacency", tuple(frozenset(a) for a in adjacency))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(ordered)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        return cls(n=n, edges=tuple(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n=n, edges=tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InputError(f"cycle needs at least 3 vertices, got {n}")
        return cls(n=n, edges=tuple((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n=n, edges=tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n=n, edges=())

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls(n=10, edges=tuple(outer + spokes + inner))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self._adjacency[u]

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_index[_normalize_edge(u, v)]

    def incident_edges(self, v: int) -> List[int]:
        """Indices of the edges containing ``v``, in edge order."""
        return sorted(self._edge_index[_normalize_edge(v, u)] for u in self._adjacency[v])

    def neighborhood(self, vertices: Iterable[int]) -> FrozenSet[int]:
        out = set()
        for v in vertices:
            out |= self._adjacency[v]
        return frozenset(out)


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Bipartite graph with left part ``0..n_left-1`` and right part ``0..n_right-1``.
    Edges are ``(left, right)`` pairs sorted lexicographically.
    """
    n_left: int
    n_right: int
    edges: Tuple[Edge, ...]
    _left_adj: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    _right_adj: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    _edge_index: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_left < 0 or self.n_right < 0:
            raise InputError("part sizes must be non-negative")
        seen = set()
        left_adj: List[set] = [set() for _ in range(self.n_left)]
        right_adj: List[set] = [set() for _ in range(self.n_right)]
        for left, right in self.edges:
            if not (0 <= left < self.n_left and 0 <= right < self.n_right):
                raise InputError(f"edge ({left}, {right}) out of range for parts {self.n_left}+{self.n_right}")
            if (left, right) in seen:
                raise InputError(f"duplicate edge ({left}, {right})")
            seen.add((left, right))
            left_adj[left].add(right)
            right_adj[right].add(left)
        ordered = tuple(sorted(seen))
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "_left_adj", tuple(frozenset(a) for a in left_adj))
        object.__setattr__(self, "_right_adj", tuple(frozenset(a) for a in right_adj))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(ordered)})

    @classmethod
    def from_edges(cls, n_left: int, n_right: int, edges: Iterable[Iterable[int]]) -> "BipartiteGraph":
        return cls(n_left=n_left, n_right=n_right, edges=tuple(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n_left: int, n_right: int) -> "BipartiteGraph":
        return cls(n_left=n_left, n_right=n_right,
                   edges=tuple((u, v) for u in range(n_left) for v in range(n_right)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def left_neighbors(self, left: int) -> FrozenSet[int]:
        return self._left_adj[left]

    def right_neighbors(self, right: int) -> FrozenSet[int]:
        return self._right_adj[right]

    def left_degree(self, left: int) -> int:
        return len(self._left_adj[left])

    def edge_index(self, left: int, right: int) -> int:
        return self._edge_index[(left, right)]

    def has_edge(self, left: int, right: int) -> bool:
        return (left, right) in self._edge_index

    def incident_edges(self, left: int) -> List[int]:
        return sorted(self._edge_index[(left, r)] for r in self._left_adj[left])

    def neighborhood(self, lefts: Iterable[int]) -> FrozenSet[int]:
        out = set()
        for v in lefts:
            out |= self._left_adj[v]
        return frozenset(out)


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on ``0..n-1``; hyperedges keep their given order and are stored as sorted tuples."""
    n: int
    hyperedges: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        normalized = []
        for h in self.hyperedges:
            members = tuple(sorted(set(h)))
            if not members:
                raise InputError("hyperedges must be nonempty")
            if len(members) != len(tuple(h)):
                raise InputError(f"hyperedge {tuple(h)} repeats a vertex")
            if members[0] < 0 or members[-1] >= self.n:
                raise InputError(f"hyperedge {members} has a member outside 0..{self.n - 1}")
            if members in seen:
                raise InputError(f"duplicate hyperedge {members}")
            seen.add(members)
            normalized.append(members)
        object.__setattr__(self, "hyperedges", tuple(normalized))

    @classmethod
    def from_sets(cls, n: int, hyperedges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n=n, hyperedges=tuple(tuple(h) for h in hyperedges))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls(n=g.n, hyperedges=g.edges)

    @classmethod
    def fano_plane(cls) -> "Hypergraph":
        lines = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
        return cls(n=7, hyperedges=tuple(lines))

    @property
    def m(self) -> int:
        return len(self.hyperedges)


@dataclass(frozen=True)
class Matching:
    """
    A set of pairwise disjoint edges. For bipartite graphs the pairs are ``(left, right)``
    and disjointness is checked per side.
    """
    edges: Tuple[Edge, ...]
    bipartite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))
        if self.bipartite:
            lefts = [e[0] for e in self.edges]
            rights = [e[1] for e in self.edges]
            if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
                raise InputError(f"edges {self.edges} are not pairwise disjoint")
        else:
            ends = [v for e in self.edges for v in e]
            if len(set(ends)) != len(ends):
                raise InputError(f"edges {self.edges} are not pairwise disjoint")

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> FrozenSet[int]:
        if self.bipartite:
            return frozenset(e[0] for e in self.edges)
        return frozenset(v for e in self.edges for v in e)

    def is_perfect(self, n: int) -> bool:
        return not self.bipartite and 2 * self.size == n

    def covers_left(self, n_left: int) -> bool:
        return self.bipartite and self.covered() == frozenset(range(n_left))

    def left_map(self) -> Dict[int, int]:
        return {left: right for left, right in self.edges}


@dataclass(frozen=True)
class HallViolator:
    """A left set ``S`` with ``|N(S)| < |S|``."""
    left: FrozenSet[int]
    neighborhood: FrozenSet[int]

    def holds_in(self, g: BipartiteGraph) -> bool:
        return g.neighborhood(self.left) == self.neighborhood and len(self.neighborhood) < len(self.left)


