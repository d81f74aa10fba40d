"""
Exact classical values by enumerating Alice's deterministic strategies.

For a fixed ``f_alice`` the best reply of Bob decomposes per question: at ``y``
he picks the answer maximizing ``sum_x V(x, y, f_alice(x), b)``. Only Alice's
maps need enumerating, over answers that can win at all.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import prod
from typing import List, Optional, Tuple

import numpy as np

from matchgames.config import get_settings
from matchgames.errors import SizeLimitError
from matchgames.game import Game

from .correlation import DeterministicStrategy

logger = logging.getLogger("matchgames.corr.classical")

BATCH = 4096


def _decode(start: int, stop: int, candidates: List[np.ndarray]) -> np.ndarray:
    """Mixed-radix decoding of assignment numbers; question 0 is the most significant digit."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, len(candidates)), dtype=np.int64)
    for x in range(len(candidates) - 1, -1, -1):
        radix = len(candidates[x])
        out[:, x] = candidates[x][idx % radix]
        idx //= radix
    return out


def _scan(game: Game, candidates: List[np.ndarray], synchronous: bool, start: int, stop: int) -> Tuple[int, int]:
    """Best ``(wins, assignment number)`` in ``[start, stop)``, lowest number on ties."""
    n = game.n_questions
    xs = np.arange(n)
    best_wins, best_at = -1, start
    for lo in range(start, stop, BATCH):
        hi = min(stop, lo + BATCH)
        f = _decode(lo, hi, candidates)
        if synchronous:
            wins = game.table[xs[:, None], xs[None, :], f[:, :, None], f[:, None, :]].sum(axis=(1, 2))
        else:
            # picked[k, x, y, b] = V(x, y, f_k(x), b)
            picked = game.table[xs[None, :], :, f, :]
            wins = picked.sum(axis=1).max(axis=2).sum(axis=1)
        k = int(np.argmax(wins))
        if wins[k] > best_wins:
            best_wins, best_at = int(wins[k]), lo + k
    return best_wins, best_at


def classical_value(
    game: Game,
    synchronous: bool = False,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[Fraction, DeterministicStrategy]:
    """
    The game with no questions is won vacuously: value 1 with the empty strategy.
    """
    settings = get_settings()
    cap = settings.limits.classical_assignments if cap is None else cap
    workers = settings.workers if workers is None else workers

    n = game.n_questions
    if n == 0:
        return Fraction(1), DeterministicStrategy((), ())
    pick = game.synchronous_candidates if synchronous else game.alice_candidates
    candidates = [np.array(pick(x), dtype=np.int64) for x in range(n)]
    total = prod(len(c) for c in candidates)
    logger.debug("classical enumeration over %d assignments (synchronous=%s)", total, synchronous)
    if total > cap:
        raise SizeLimitError("classical_assignments", total, cap)

    if workers <= 1 or total < 2 * BATCH:
        best_wins, best_at = _scan(game, candidates, synchronous, 0, total)
    else:
        step = -(-total // workers)
        chunks = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _scan(game, candidates, synchronous, *c), chunks))
        # chunks are in order, so the first strict maximum is the lowest assignment number
        best_wins, best_at = -1, 0
        for wins, at in results:
            if wins > best_wins:
                best_wins, best_at = wins, at

    f_alice = tuple(int(a) for a in _decode(best_at, best_at + 1, candidates)[0])
    if synchronous:
        f_bob = f_alice
    else:
        scores = game.table[np.arange(n), :, np.array(f_alice), :].sum(axis=0)
        f_bob = tuple(int(b) for b in np.argmax(scores, axis=1))
    value = Fraction(best_wins, n * n)
    return value, DeterministicStrategy(f_alice, f_bob)
