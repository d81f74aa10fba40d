from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from matchgames.config import get_settings
from matchgames.errors import SizeLimitError

from .constructions import induced_bipartite
from .structures import BipartiteGraph, Edge, Graph, HallViolator, Hypergraph, Matching

logger = logging.getLogger("matchgames.graph.matching")


def maximum_matching(g: Graph, cap: Optional[int] = None) -> Matching:
    """
    Exhaustive branch-and-bound: take the lowest uncovered vertex, either match it to
    one of its uncovered neighbours or leave it single, pruning on ``|M| + uncovered/2``.
    """
    cap = get_settings().limits.matching_vertices if cap is None else cap
    if g.n > cap:
        raise SizeLimitError("matching_vertices", g.n, cap)

    adj = [sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]
    target = g.n // 2
    best: List[Edge] = []

    def search(mask: int, chosen: List[Edge]) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) == target:
                return True
        if len(chosen) + bin(mask).count("1") // 2 <= len(best):
            return False
        if not mask:
            return False
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        candidates = adj[v] & rest
        while candidates:
            u = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            chosen.append((v, u))
            if search(rest & ~(1 << u), chosen):
                return True
            chosen.pop()
        return search(rest, chosen)

    search((1 << g.n) - 1, [])
    return Matching(edges=tuple(best))


def l_perfect_matching(g: BipartiteGraph) -> Union[Matching, HallViolator]:
    """
    Augmenting paths from each left vertex in turn. When a search fails, the left
    vertices it reached form a Hall violator: their neighbourhood is exactly the
    right vertices it reached, all matched back into the set.
    """
    match_right: List[Optional[int]] = [None] * g.n_right

    def augment(u: int, seen_right: set, seen_left: set) -> bool:
        seen_left.add(u)
        for r in sorted(g.left_neighbors(u)):
            if r in seen_right:
                continue
            seen_right.add(r)
            owner = match_right[r]
            if owner is None or augment(owner, seen_right, seen_left):
                match_right[r] = u
                return True
        return False

    for u in range(g.n_left):
        seen_right: set = set()
        seen_left: set = set()
        if not augment(u, seen_right, seen_left):
            violator = HallViolator(left=frozenset(seen_left), neighborhood=frozenset(seen_right))
            logger.debug("no L-perfect matching; Hall violator %s", sorted(seen_left))
            return violator

    pairs = tuple((u, r) for r, u in enumerate(match_right) if u is not None)
    return Matching(edges=pairs, bipartite=True)


def independence_number(g: Graph, cap: Optional[int] = None) -> int:
    cap = get_settings().limits.independence_vertices if cap is None else cap
    if g.n > cap:
        raise SizeLimitError("independence_vertices", g.n, cap)

    closed = [(1 << v) | sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]

    @lru_cache(maxsize=None)
    def alpha(mask: int) -> int:
        if not mask:
            return 0
        # an isolated vertex is always taken; otherwise branch on a max-degree vertex
        best_v, best_deg = -1, -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = bin(closed[v] & mask).count("1") - 1
            if deg == 0:
                return 1 + alpha(mask & ~(1 << v))
            if deg > best_deg:
                best_v, best_deg = v, deg
        take = 1 + alpha(mask & ~closed[best_v])
        skip = alpha(mask & ~(1 << best_v))
        return max(take, skip)

    return alpha((1 << g.n) - 1)


@dataclass(frozen=True)
class SharpReduction:
    """Outcome of peeling degree-1 left vertices together with their right neighbours."""
    reduced: BipartiteGraph
    remaining_left: FrozenSet[int]
    remaining_right: FrozenSet[int]
    forced: Tuple[Edge, ...]
    lonely_left: FrozenSet[int]


def sharp_reduction(g: BipartiteGraph, order: Optional[Sequence[int]] = None) -> SharpReduction:
    """
    Repeatedly remove a left vertex of degree exactly 1 with its neighbour. ``order`` is the
    left-vertex scan order (default ascending); the first degree-1 vertex in it is removed.
    """
    order = list(range(g.n_left)) if order is None else list(order)
    lefts = set(range(g.n_left))
    rights = set(range(g.n_right))
    forced: List[Edge] = []

    while True:
        victim = None
        for u in order:
            if u in lefts and len(g.left_neighbors(u) & rights) == 1:
                victim = u
                break
        if victim is None:
            break
        (r,) = tuple(g.left_neighbors(victim) & rights)
        forced.append((victim, r))
        lefts.discard(victim)
        rights.discard(r)

    lonely = frozenset(u for u in lefts if not (g.left_neighbors(u) & rights))
    return SharpReduction(
        reduced=induced_bipartite(g, lefts, rights),
        remaining_left=frozenset(lefts),
        remaining_right=frozenset(rights),
        forced=tuple(forced),
        lonely_left=lonely,
    )


@dataclass(frozen=True)
class Degree2Decomposition:
    forced: Matching
    degree2: BipartiteGraph


def degree2_decomposition(g: BipartiteGraph) -> Optional[Degree2Decomposition]:
    """
    Split ``g`` into the forced matching and a left-degree-2 subgraph covering the rest of L;
    each remaining left vertex keeps its two lowest right neighbours. Absent when the
    reduction leaves a lonely left vertex.
    """
    sharp = sharp_reduction(g)
    if sharp.lonely_left:
        return None
    edges = []
    for u in sorted(sharp.remaining_left):
        nbrs = sorted(sharp.reduced.left_neighbors(u))
        edges.extend((u, r) for r in nbrs[:2])
    return Degree2Decomposition(
        forced=Matching(edges=sharp.forced, bipartite=True),
        degree2=BipartiteGraph.from_edges(g.n_left, g.n_right, edges),
    )


def hyper_perfect_matching(h: Hypergraph) -> Optional[Tuple[int, ...]]:
    """Indices of pairwise disjoint hyperedges covering every vertex, or absent."""
    containing = [[i for i, e in enumerate(h.hyperedges) if v in e] for v in range(h.n)]
    masks = [sum(1 << v for v in e) for e in h.hyperedges]
    full = (1 << h.n) - 1

    def search(covered: int, chosen: List[int]) -> Optional[List[int]]:
        if covered == full:
            return chosen
        v = (~covered & full & -(~covered & full)).bit_length() - 1
        for i in containing[v]:
            if masks[i] & covered:
                continue
            found = search(covered | masks[i], chosen + [i])
            if found is not None:
                return found
        return None

    found = search(0, [])
    return None if found is None else tuple(sorted(found))


def brute_force_matching_number(g: Graph) -> int:
    """Size of a largest pairwise disjoint edge subset, by trying subsets largest first."""
    for k in range(g.n // 2, 0, -1):
        for subset in combinations(g.edges, k):
            ends = [v for e in subset for v in e]
            if len(set(ends)) == len(ends):
                return k
    return 0
