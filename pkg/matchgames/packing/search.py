"""
Heuristic search for quantum perfect matching certificates.

A certificate assigns edge ``e`` a projector of some rank ``k_e``; the ranks at every
vertex add up to ``d``, so ``k`` is a ``d``-scaled fractional perfect matching. For
each such rank pattern the search alternates between making the edges at one vertex
an orthonormal frame (polar factor of their stacked frames) and merging the two
endpoint suggestions of each edge into the nearest rank-``k_e`` projector.
A miss proves nothing.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from matchgames.config import get_settings
from matchgames.errors import PreconditionError
from matchgames.graph import Graph

from .certificates import verify_qpm_certificate
from .family import ProjectorFamily

logger = logging.getLogger("matchgames.packing.search")

CONVERGENCE_TOL = 1e-7
POLISH_STEPS = 50


def rank_patterns(g: Graph, d: int, cap: int = 64) -> List[Tuple[int, ...]]:
    """Edge ranks in ``0..d`` summing to ``d`` at every vertex, in lexicographic order, at most ``cap``."""
    if g.n * d % 2:
        return []
    load = [0] * g.n
    last_edge = [-1] * g.n
    for i, (u, v) in enumerate(g.edges):
        last_edge[u] = last_edge[v] = i
    if any(last_edge[x] < 0 for x in range(g.n)):
        return []
    ranks = [0] * g.m
    out: List[Tuple[int, ...]] = []

    def search(i: int) -> None:
        if len(out) >= cap:
            return
        if i == g.m:
            out.append(tuple(ranks))
            return
        u, v = g.edges[i]
        for k in range(min(d - load[u], d - load[v]) + 1):
            if last_edge[u] == i and load[u] + k != d:
                continue
            if last_edge[v] == i and load[v] + k != d:
                continue
            ranks[i] = k
            load[u] += k
            load[v] += k
            search(i + 1)
            load[u] -= k
            load[v] -= k
        ranks[i] = 0

    search(0)
    return out


def _polar(w: np.ndarray) -> np.ndarray:
    u, _, vh = np.linalg.svd(w)
    return u @ vh


def _top_projector(p: np.ndarray, k: int) -> np.ndarray:
    """Frame (``d x k``) of the nearest rank-``k`` projector to a Hermitian matrix."""
    _, vecs = np.linalg.eigh((p + p.conj().T) / 2)
    return vecs[:, -k:] if k else vecs[:, :0]


def _residual(g: Graph, frames: Dict[int, np.ndarray], d: int) -> float:
    eye = np.eye(d, dtype=complex)
    worst = 0.0
    for x in range(g.n):
        stacked = np.hstack([frames[e] for e in g.incident_edges(x)])
        worst = max(worst, float(np.linalg.norm(stacked.conj().T @ stacked - eye, 2)))
    return worst


def _family(frames: Dict[int, np.ndarray], d: int) -> ProjectorFamily:
    return ProjectorFamily(d, {e: v @ v.conj().T for e, v in frames.items() if v.shape[1]})


def _attempt(g: Graph, d: int, pattern: Tuple[int, ...], iterations: int,
             rng: np.random.Generator) -> Tuple[Optional[ProjectorFamily], float]:
    frames: Dict[int, np.ndarray] = {}
    for e, k in enumerate(pattern):
        z = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
        frames[e] = np.linalg.qr(z)[0] if k else np.zeros((d, 0), dtype=complex)

    residual = _residual(g, frames, d)
    converged_at = None
    for step in range(iterations + POLISH_STEPS):
        suggestions: Dict[int, List[np.ndarray]] = {e: [] for e in frames}
        for x in range(g.n):
            incident = g.incident_edges(x)
            unitary = _polar(np.hstack([frames[e] for e in incident]))
            col = 0
            for e in incident:
                k = pattern[e]
                block = unitary[:, col:col + k]
                suggestions[e].append(block @ block.conj().T)
                col += k
        for e, k in enumerate(pattern):
            if k:
                frames[e] = _top_projector(sum(suggestions[e]) / 2, k)
        residual = _residual(g, frames, d)
        if converged_at is None and residual < CONVERGENCE_TOL:
            converged_at = step
        if converged_at is not None and step - converged_at >= POLISH_STEPS:
            break
    if converged_at is None:
        return None, residual
    family = _family(frames, d)
    if not verify_qpm_certificate(g, family).passed:
        return None, residual
    return family, residual


@dataclass(frozen=True)
class SearchOutcome:
    family: Optional[ProjectorFamily]
    attempts: int
    best_residual: float
    seed: int


def search_qpm(
    g: Graph,
    d: int,
    iterations: int = 500,
    seed: Optional[int] = None,
    restarts: int = 4,
    pattern_cap: int = 64,
    workers: Optional[int] = None,
) -> SearchOutcome:
    if d < 1:
        raise PreconditionError(f"dimension must be positive, got {d}")
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    workers = settings.workers if workers is None else workers
    patterns = rank_patterns(g, d, pattern_cap)
    if not patterns:
        logger.debug("no rank pattern for d=%d: %d*d is odd or no scaled fractional matching", d, g.n)
        return SearchOutcome(None, 0, float("inf"), seed)

    children = np.random.SeedSequence(seed).spawn(len(patterns) * restarts)
    jobs = [(patterns[i // restarts], children[i]) for i in range(len(children))]

    def run(job):
        pattern, child = job
        return _attempt(g, d, pattern, iterations, np.random.default_rng(child))

    best = float("inf")
    tried = 0
    # jobs run in order so the returned family does not depend on the worker count
    chunk = max(1, workers)
    with ThreadPoolExecutor(max_workers=chunk) as pool:
        for lo in range(0, len(jobs), chunk):
            for family, residual in pool.map(run, jobs[lo:lo + chunk]):
                tried += 1
                best = min(best, residual)
                if family is not None:
                    logger.debug("certificate found after %d attempts", tried)
                    return SearchOutcome(family, tried, residual, seed)
    logger.warning("no certificate for d=%d after %d attempts (best residual %.3g)", d, tried, best)
    return SearchOutcome(None, tried, best, seed)


def seesaw_search(
    g: Graph,
    d: int,
    iterations: int = 500,
    seed: Optional[int] = None,
    restarts: int = 4,
    pattern_cap: int = 64,
) -> Optional[ProjectorFamily]:
    return search_qpm(g, d, iterations, seed, restarts, pattern_cap).family
