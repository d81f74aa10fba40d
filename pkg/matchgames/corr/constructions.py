from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from matchgames.config import get_settings
from matchgames.errors import PreconditionError, ShapeMismatchError, SizeLimitError
from matchgames.exact.fractional import FractionalMatching
from matchgames.game import pm_game
from matchgames.graph import (
    BipartiteGraph,
    Graph,
    HallViolator,
    degree2_decomposition,
    l_perfect_matching,
)

from .correlation import Correlation, Entry, is_nonsignaling, winning_probability

logger = logging.getLogger("matchgames.corr.constructions")

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _pair_distribution(mine: Sequence[int], theirs: Sequence[int]) -> List[Tuple[int, int, Fraction]]:
    """
    Joint right-vertex choices for two distinct left vertices offering one or two
    right neighbours each; the chosen right vertices are always distinct.
    """
    if len(mine) == 1 or len(theirs) == 1:
        q = Fraction(1, len(mine) * len(theirs))
        return [(r, s, q) for r in mine for s in theirs]
    shared = set(mine) & set(theirs)
    if len(shared) == 2:
        p, q = mine
        return [(p, q, HALF), (q, p, HALF)]
    if len(shared) == 1:
        (c,) = shared
        (u,) = set(mine) - shared
        (w,) = set(theirs) - shared
        return [(c, w, HALF), (u, c, HALF)]
    return [(r, s, QUARTER) for r in mine for s in theirs]


def _options_correlation(g: BipartiteGraph, options: Dict[int, Tuple[int, ...]]) -> Correlation:
    """Each left vertex picks uniformly among its one or two options, coordinated pairwise."""
    entries: Dict[Entry, Fraction] = {}
    for u in range(g.n_left):
        mine = options[u]
        for r in mine:
            e = g.edge_index(u, r)
            entries[(u, u, e, e)] = Fraction(1, len(mine))
        for w in range(g.n_left):
            if w == u:
                continue
            for r, s, q in _pair_distribution(mine, options[w]):
                entries[(u, w, g.edge_index(u, r), g.edge_index(w, s))] = q
    return Correlation(g.n_left, g.m, entries)


def ns_left_degree2_corr(g: BipartiteGraph) -> Correlation:
    bad = [u for u in range(g.n_left) if g.left_degree(u) != 2]
    if bad:
        raise PreconditionError(f"left vertices {bad} do not have degree exactly 2")
    return _options_correlation(g, {u: tuple(sorted(g.left_neighbors(u))) for u in range(g.n_left)})


def ns_from_sharp(g: BipartiteGraph) -> Optional[Correlation]:
    """
    Forced left vertices answer their matched edge; the rest play the degree-2 rule on
    the two edges kept by ``degree2_decomposition``. ``None`` when a left vertex is lonely.
    """
    decomposition = degree2_decomposition(g)
    if decomposition is None:
        return None
    options: Dict[int, Tuple[int, ...]] = {u: (r,) for u, r in decomposition.forced.edges}
    for u in range(g.n_left):
        if u not in options:
            options[u] = tuple(sorted(decomposition.degree2.left_neighbors(u)))
    return _options_correlation(g, options)


def ns_odd_cycle_corr(n: int) -> Correlation:
    """
    Perfect correlation for the perfect matching game of the n-cycle. Each vertex answers
    its forward edge ``{x, x+1}`` or backward edge ``{x-1, x}`` with probability 1/2;
    neighbours agree on their shared edge or both point away from it, vertices two apart
    point the same way, and farther vertices answer independently.
    """
    if n < 5 or n % 2 == 0:
        raise PreconditionError(f"odd cycle correlation needs odd n >= 5, got {n}")
    g = Graph.cycle(n)
    fwd = [g.edge_index(x, (x + 1) % n) for x in range(n)]
    bwd = [g.edge_index((x - 1) % n, x) for x in range(n)]
    entries: Dict[Entry, Fraction] = {}
    for x in range(n):
        for y in range(n):
            d = (y - x) % n
            if d == 0:
                pairs = [(fwd[x], fwd[y]), (bwd[x], bwd[y])]
            elif d == 1:
                pairs = [(fwd[x], bwd[y]), (bwd[x], fwd[y])]
            elif d == n - 1:
                pairs = [(bwd[x], fwd[y]), (fwd[x], bwd[y])]
            elif d in (2, n - 2):
                pairs = [(fwd[x], fwd[y]), (bwd[x], bwd[y])]
            else:
                for a in (fwd[x], bwd[x]):
                    for b in (fwd[y], bwd[y]):
                        entries[(x, y, a, b)] = QUARTER
                continue
            for a, b in pairs:
                entries[(x, y, a, b)] = HALF
    return Correlation(n, g.m, entries)


def _check_fpm(g: Graph, f: FractionalMatching) -> None:
    if f.graph != g:
        raise PreconditionError("fractional matching belongs to a different graph")
    excess = f.triangle_excess()
    if excess is not None:
        raise PreconditionError(f"triangle {excess} carries weight above 1")


def fpm_to_ns_correlation(g: Graph, f: FractionalMatching, scale_cap: Optional[int] = None) -> Correlation:
    """
    Perfect nonsignaling correlation for ``pm_game(g)`` with marginals ``p(xy|x) = f(xy)``.

    With ``r`` the least common multiple of the weight denominators and ``h = r*f``,
    a question pair ``x != x'`` answers the shared edge with probability ``f(xx')``.
    The remaining mass is split by a perfect matching between ``h(xy)`` copies of
    every other neighbour ``y`` of ``x`` and ``h(x'y')`` copies of every other
    neighbour ``y'`` of ``x'``, copies joined when ``y != y'``.
    """
    _check_fpm(g, f)
    scale_cap = get_settings().limits.fpm_scale if scale_cap is None else scale_cap
    r = f.scale
    if r > scale_cap:
        raise SizeLimitError("fpm_scale", r, scale_cap)
    h = {e: int(w * r) for e, w in f.weights.items()}

    def units(u: int, v: int) -> int:
        return h.get((min(u, v), max(u, v)), 0)

    entries: Dict[Entry, Fraction] = {}
    for x in range(g.n):
        for y in sorted(g.neighbors(x)):
            if units(x, y):
                e = g.edge_index(x, y)
                entries[(x, x, e, e)] = f.weight(x, y)

    for x in range(g.n):
        for x2 in range(g.n):
            if x == x2:
                continue
            if g.has_edge(x, x2) and units(x, x2):
                e = g.edge_index(x, x2)
                entries[(x, x2, e, e)] = f.weight(x, x2)
            left = [y for y in sorted(g.neighbors(x) - {x2}) for _ in range(units(x, y))]
            right = [y for y in sorted(g.neighbors(x2) - {x}) for _ in range(units(x2, y))]
            if not left and not right:
                continue
            copies = BipartiteGraph.from_edges(
                len(left), len(right),
                [(i, j) for i, y in enumerate(left) for j, y2 in enumerate(right) if y != y2],
            )
            matched = l_perfect_matching(copies)
            if isinstance(matched, HallViolator) or len(left) != len(right):
                raise PreconditionError(f"no perfect matching of answer copies for questions ({x}, {x2})")
            counts: Dict[Tuple[int, int], int] = {}
            for i, j in matched.edges:
                key = (left[i], right[j])
                counts[key] = counts.get(key, 0) + 1
            for (y, y2), c in counts.items():
                entries[(x, x2, g.edge_index(x, y), g.edge_index(x2, y2))] = Fraction(c, r)
    logger.debug("built correlation from fractional matching with scale %d", r)
    return Correlation(g.n, g.m, entries)


def marginals_to_fpm(corr: Correlation, g: Graph) -> FractionalMatching:
    """
    Read ``f(xy) = p(xy|x)`` off a perfect nonsignaling correlation for ``pm_game(g)``,
    after checking ``p(e|x) = p(e,e|x,x) = p(e,e|x,y)`` for every edge ``e = xy``.
    Marginals putting weight above 1 on a triangle are rejected.
    """
    game = pm_game(g)
    if corr.shape != game.shape:
        raise ShapeMismatchError(f"correlation shape {corr.shape} does not match game shape {game.shape}")
    if winning_probability(game, corr) != 1:
        raise PreconditionError("correlation does not win the perfect matching game with probability 1")
    if not is_nonsignaling(corr):
        raise PreconditionError("correlation is signaling")

    weights: Dict[Tuple[int, int], Fraction] = {}
    for x in range(g.n):
        marginal = corr.alice_marginal(x, x)
        for y in sorted(g.neighbors(x)):
            e = g.edge_index(x, y)
            px = marginal.get(e, Fraction(0))
            if px != corr.p(x, x, e, e):
                raise PreconditionError(f"p(e|x) = p(e,e|x,x) fails for x={x}, e={g.edges[e]}")
            if px != corr.p(x, y, e, e):
                raise PreconditionError(f"p(e|x) = p(e,e|x,y) fails for x={x}, y={y}")
            key = g.edges[e]
            if key in weights and weights[key] != px:
                raise PreconditionError(f"marginals of edge {key} differ between its endpoints")
            weights[key] = px
    f = FractionalMatching(g, weights)
    excess = f.triangle_excess()
    if excess is not None:
        raise PreconditionError(f"marginals put weight above 1 on triangle {excess}")
    return f
