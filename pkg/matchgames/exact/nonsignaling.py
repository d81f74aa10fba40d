"""
Nonsignaling values as exact linear programs.

Variable order follows the canonical index ``(x*|X| + y)*|A|**2 + a*|A| + b``
restricted to the answers that can win (see ``Game.alice_candidates``); an
answer that never wins for a question is remapped onto a kept one, which
preserves normalization, the nonsignaling equalities and synchronicity
without lowering the value.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from matchgames.config import get_settings
from matchgames.corr.correlation import Correlation, Entry
from matchgames.errors import SizeLimitError
from matchgames.game import Game

from .simplex import LinearProgram, Optimal, solve_lp

logger = logging.getLogger("matchgames.exact.nonsignaling")


@dataclass(frozen=True)
class NonsignalingProgram:
    program: LinearProgram
    variables: Tuple[Entry, ...]
    n_questions: int
    n_answers: int

    def correlation(self, point) -> Correlation:
        entries = {key: v for key, v in zip(self.variables, point) if v}
        return Correlation(self.n_questions, self.n_answers, entries)


def canonical_index(game: Game, x: int, y: int, a: int, b: int) -> int:
    nx, na = game.shape
    return (x * nx + y) * na * na + a * na + b


def _check_cap(game: Game, cap: Optional[int]) -> None:
    cap = get_settings().limits.lp_vars if cap is None else cap
    nx, na = game.shape
    size = nx * nx * na * na
    if size > cap:
        raise SizeLimitError("lp_vars", size, cap)


def build_ns_program(game: Game, synchronous: bool = False, winning_only: bool = False) -> NonsignalingProgram:
    """
    ``winning_only`` keeps only winning entries and drops the objective, turning the
    program into a feasibility test for a perfect nonsignaling correlation.
    """
    nx, na = game.shape
    if synchronous:
        alice = [game.synchronous_candidates(x) for x in range(nx)]
        bob = alice
    else:
        alice = [game.alice_candidates(x) for x in range(nx)]
        bob = [game.bob_candidates(y) for y in range(nx)]

    variables: List[Entry] = []
    for x in range(nx):
        for y in range(nx):
            for a in alice[x]:
                for b in bob[y]:
                    if synchronous and x == y and a != b:
                        continue
                    if winning_only and not game.table[x, y, a, b]:
                        continue
                    variables.append((x, y, a, b))
    index = {key: i for i, key in enumerate(variables)}

    by_pair: Dict[Tuple[int, int], List[int]] = {(x, y): [] for x in range(nx) for y in range(nx)}
    alice_rows: Dict[Tuple[int, int, int], Dict[int, int]] = {}
    bob_rows: Dict[Tuple[int, int, int], Dict[int, int]] = {}
    for (x, y, a, b), i in index.items():
        by_pair[(x, y)].append(i)
        alice_rows.setdefault((x, y, a), {})[i] = 1
        bob_rows.setdefault((x, y, b), {})[i] = 1

    constraints = [({i: 1 for i in cols}, "=", 1) for cols in by_pair.values()]
    # marginals are pinned to the reference question 0 of the other player
    for x in range(nx):
        for a in alice[x]:
            ref = alice_rows.get((x, 0, a), {})
            for y in range(1, nx):
                row = dict(alice_rows.get((x, y, a), {}))
                for i in ref:
                    row[i] = -1
                if row:
                    constraints.append((row, "=", 0))
    for y in range(nx):
        for b in bob[y]:
            ref = bob_rows.get((0, y, b), {})
            for x in range(1, nx):
                row = dict(bob_rows.get((x, y, b), {}))
                for i in ref:
                    row[i] = -1
                if row:
                    constraints.append((row, "=", 0))

    weight = Fraction(1, nx * nx) if nx else Fraction(0)
    objective = {} if winning_only else {
        i: weight for i, (x, y, a, b) in enumerate(variables) if game.table[x, y, a, b]
    }
    program = LinearProgram.build(len(variables), objective, constraints)
    logger.debug("nonsignaling program: %d variables, %d rows", len(variables), len(constraints))
    return NonsignalingProgram(program, tuple(variables), nx, na)


def ns_value(game: Game, synchronous: bool = False, cap: Optional[int] = None) -> Tuple[Fraction, Correlation]:
    _check_cap(game, cap)
    if game.n_questions == 0:
        # the empty game is won vacuously
        return Fraction(1), Correlation(0, game.n_answers, {})
    ns = build_ns_program(game, synchronous)
    result = solve_lp(ns.program)
    if not isinstance(result, Optimal):
        # any deterministic strategy over the candidates is feasible
        raise RuntimeError(f"nonsignaling program unexpectedly {type(result).__name__}")
    return result.value, ns.correlation(result.point)


def ns_perfect_correlation(game: Game, synchronous: bool = False, cap: Optional[int] = None) -> Optional[Correlation]:
    """A nonsignaling correlation winning with probability 1, or ``None`` if none exists."""
    _check_cap(game, cap)
    ns = build_ns_program(game, synchronous, winning_only=True)
    result = solve_lp(ns.program)
    if not isinstance(result, Optimal):
        return None
    return ns.correlation(result.point)
