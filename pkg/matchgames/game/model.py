from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from matchgames.errors import InputError


@dataclass(frozen=True, eq=False)
class Game:
    """
    A nonlocal game with question set ``0..n_questions-1`` and answer set
    ``0..n_answers-1``, played under the uniform distribution on question pairs.

    ``table[x, y, a, b]`` is the verifier's 0/1 predicate V(x, y, a, b).
    ``answer_labels[a]`` names answer ``a`` (edge endpoints, hyperedge members
    or a vertex of the target graph).
    """
    n_questions: int
    n_answers: int
    table: np.ndarray
    answer_labels: Tuple[Tuple[int, ...], ...] = ()
    kind: str = "game"
    _alice_support: np.ndarray = field(init=False, repr=False)
    _bob_support: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n_questions < 0:
            raise InputError(f"question count must be non-negative, got {self.n_questions}")
        if self.n_answers < 1:
            raise InputError("a game needs at least one answer")
        table = np.asarray(self.table, dtype=bool)
        expected = (self.n_questions, self.n_questions, self.n_answers, self.n_answers)
        if table.shape != expected:
            raise InputError(f"verification table has shape {table.shape}, expected {expected}")
        table = table.copy()
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        if not self.answer_labels:
            object.__setattr__(self, "answer_labels", tuple((a,) for a in range(self.n_answers)))
        elif len(self.answer_labels) != self.n_answers:
            raise InputError(f"expected {self.n_answers} answer labels, got {len(self.answer_labels)}")
        # [x, a]: some winning entry has Alice answer a to x (resp. Bob)
        object.__setattr__(self, "_alice_support", table.any(axis=(1, 3)))
        object.__setattr__(self, "_bob_support", table.any(axis=(0, 2)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_questions, self.n_answers

    def wins(self, x: int, y: int, a: int, b: int) -> bool:
        return bool(self.table[x, y, a, b])

    def same_table(self, other: "Game") -> bool:
        return self.shape == other.shape and bool(np.array_equal(self.table, other.table))

    def alice_candidates(self, x: int) -> List[int]:
        """
        Answers to ``x`` that occur in some winning entry for Alice. Every other
        answer can be remapped onto one of these without losing; when none
        survive, answer 0 is kept as the fallback.
        """
        found = np.flatnonzero(self._alice_support[x]).tolist()
        return found or [0]

    def bob_candidates(self, y: int) -> List[int]:
        found = np.flatnonzero(self._bob_support[y]).tolist()
        return found or [0]

    def synchronous_candidates(self, x: int) -> List[int]:
        """Candidates shared by both players, for strategies where Alice and Bob answer alike."""
        found = np.flatnonzero(self._alice_support[x] | self._bob_support[x]).tolist()
        return found or [0]


def is_synchronous(game: Game) -> bool:
    """V(x, x, a, b) = 0 whenever a != b."""
    t = game.table
    diagonal = t[np.arange(game.n_questions), np.arange(game.n_questions)]
    off = ~np.eye(game.n_answers, dtype=bool)
    return not bool((diagonal & off).any())


def is_bisynchronous(game: Game) -> bool:
    """Synchronous, and additionally V(x, y, a, a) = 0 whenever x != y."""
    if not is_synchronous(game):
        return False
    t = game.table
    same_answer = t[:, :, np.arange(game.n_answers), np.arange(game.n_answers)]
    off = ~np.eye(game.n_questions, dtype=bool)
    return not bool((same_answer & off[:, :, None]).any())
