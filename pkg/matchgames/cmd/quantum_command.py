from __future__ import annotations

import logging
from typing import Optional

from matchgames.cmd import EXIT_ABSENT, EXIT_OK, fail
from matchgames.config import get_settings
from matchgames.corr.classical import classical_value
from matchgames.errors import MatchGamesError
from matchgames.game import bpm_game
from matchgames.graph import BipartiteGraph
from matchgames.ncalg.sos import kn2_value_table
from matchgames.quantum.strategy import (
    k32_optimal_strategy,
    kn2_answer_pairs,
    observable_sum_norms,
    quantum_win_prob,
    synchronous_strategy,
    trivial_strategy,
)
from matchgames.quantum.sweep import seesaw_sweep
from matchgames.utils import short_rational

logger = logging.getLogger("matchgames.cmd.quantum_command")

DEMO_TOL = 1e-9
SWEEP_TOL = 1e-6


def command_quantum_k32_demo() -> int:
    game = bpm_game(BipartiteGraph.complete(3, 2))
    strategy = k32_optimal_strategy()
    value = quantum_win_prob(game, strategy)
    classical, _ = classical_value(game)
    table = kn2_value_table(3)
    norm_alice, norm_bob = observable_sum_norms(strategy, kn2_answer_pairs(3))

    print(f"classical value:       {short_rational(classical)}")
    print(f"quantum strategy:      {value:.12f}  (target {short_rational(table.quantum)})")
    print(f"||sum A_v||, ||sum B_w||: {norm_alice:.3g}, {norm_bob:.3g}")
    ok = abs(value - float(table.quantum)) < DEMO_TOL and classical == table.classical
    return EXIT_OK if ok else EXIT_ABSENT


def command_quantum_sweep(n: int, restarts: int = 200, seed: Optional[int] = None, dimension: int = 2) -> int:
    seed = get_settings().seed if seed is None else seed
    try:
        result = seesaw_sweep(n, restarts=restarts, seed=seed, dimension=dimension)
        table = kn2_value_table(n)
        game = bpm_game(BipartiteGraph.complete(n, 2))
        baseline = quantum_win_prob(game, trivial_strategy(n))
        shared = quantum_win_prob(game, synchronous_strategy(n))
    except MatchGamesError as e:
        return fail(e)

    bound = float(table.quantum)
    print(f"seed: {result.seed}")
    print(f"restarts: {restarts}, dimension: {dimension}")
    print(f"best seesaw value:     {result.best_value:.12f}")
    print(f"quantum value:         {short_rational(table.quantum)}")
    print(f"trivial strategy:      {baseline:.12f}")
    print(f"synchronous strategy:  {shared:.12f}")
    if result.best_value > bound + SWEEP_TOL:
        logger.warning("seesaw value %.12f exceeds %s", result.best_value, short_rational(table.quantum))
        return EXIT_ABSENT
    return EXIT_OK
