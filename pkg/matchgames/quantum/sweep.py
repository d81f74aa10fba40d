"""
Seesaw over two-outcome strategies for the bipartite matching game on K_{n,2}.

With ``A_x``, ``B_y`` the differences of the two answer projectors, the winning
probability is ``1/2 + (1/(2 n^2)) sum_{x,y} s(x,y) <psi| A_x (x) B_y |psi>`` where
``s = +1`` on equal questions and ``-1`` otherwise. Each step optimizes one block
exactly: Alice's observables, Bob's, then the state as a top eigenvector.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from matchgames.config import get_settings
from matchgames.errors import PreconditionError

from .strategy import QuantumStrategy, kn2_answer_pairs, random_state, random_unitary

logger = logging.getLogger("matchgames.quantum.sweep")

CONVERGENCE_TOL = 1e-10


def _sign(h: np.ndarray) -> np.ndarray:
    """Hermitian involution maximizing ``Tr(A h)``; zero eigenvalues map to +1."""
    h = (h + h.conj().T) / 2
    w, v = np.linalg.eigh(h)
    signs = np.where(w >= 0, 1.0, -1.0)
    return (v * signs) @ v.conj().T


def _random_involution(d: int, rng: np.random.Generator) -> np.ndarray:
    u = random_unitary(d, rng)
    signs = rng.choice([-1.0, 1.0], size=d)
    return (u * signs) @ u.conj().T


def _signs(n: int) -> np.ndarray:
    return np.where(np.eye(n, dtype=bool), 1.0, -1.0)


def bias_value(psi: np.ndarray, alice: List[np.ndarray], bob: List[np.ndarray]) -> float:
    n = len(alice)
    s = _signs(n)
    total = 0.0
    for x in range(n):
        for y in range(n):
            total += s[x, y] * np.trace(psi.conj().T @ alice[x] @ psi @ bob[y].T).real
    return 0.5 + total / (2 * n * n)


@dataclass(frozen=True)
class SeesawRun:
    value: float
    iterations: int
    state: np.ndarray
    alice: Tuple[np.ndarray, ...]
    bob: Tuple[np.ndarray, ...]

    def strategy(self) -> QuantumStrategy:
        n = len(self.alice)
        return QuantumStrategy.from_observables(
            self.state.reshape(-1), list(self.alice), list(self.bob), 2 * n, kn2_answer_pairs(n)
        )


def seesaw_kn2(n: int, d: int, rng: np.random.Generator, max_iterations: int = 200) -> SeesawRun:
    s = _signs(n)
    alice = [_random_involution(d, rng) for _ in range(n)]
    bob = [_random_involution(d, rng) for _ in range(n)]
    psi = random_state(d * d, rng).reshape(d, d)
    value = bias_value(psi, alice, bob)
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        alice = [_sign(sum(s[x, y] * psi @ bob[y].T @ psi.conj().T for y in range(n))) for x in range(n)]
        bob = [_sign(sum(s[x, y] * psi.conj().T @ alice[x] @ psi for x in range(n)).T) for y in range(n)]
        w = sum(s[x, y] * np.kron(alice[x], bob[y]) for x in range(n) for y in range(n))
        _, vecs = np.linalg.eigh((w + w.conj().T) / 2)
        psi = vecs[:, -1].reshape(d, d)
        new_value = bias_value(psi, alice, bob)
        improved = new_value - value
        value = new_value
        if improved < CONVERGENCE_TOL:
            break
    return SeesawRun(value, iterations, psi.copy(), tuple(alice), tuple(bob))


@dataclass(frozen=True)
class SweepResult:
    n: int
    dimension: int
    seed: int
    values: Tuple[float, ...]
    best: SeesawRun

    @property
    def best_value(self) -> float:
        return self.best.value


def seesaw_sweep(
    n: int,
    restarts: int = 200,
    seed: Optional[int] = None,
    dimension: int = 2,
    workers: Optional[int] = None,
) -> SweepResult:
    """
    Random-restart seesaw. Restart ``k`` draws from its own child of ``SeedSequence(seed)``,
    so results do not depend on the worker count.
    """
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    if restarts < 1:
        raise PreconditionError("at least one restart is needed")
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    workers = settings.workers if workers is None else workers
    children = np.random.SeedSequence(seed).spawn(restarts)

    def run(child) -> SeesawRun:
        return seesaw_kn2(n, dimension, np.random.default_rng(child))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(run, children))
    else:
        runs = [run(c) for c in children]
    best = max(runs, key=lambda r: r.value)
    logger.debug("seesaw n=%d d=%d seed=%d: best %.12f over %d restarts", n, dimension, seed, best.value, restarts)
    return SweepResult(n, dimension, seed, tuple(r.value for r in runs), best)
