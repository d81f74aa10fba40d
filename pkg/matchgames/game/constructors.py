from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from matchgames.errors import PreconditionError
from matchgames.graph import BipartiteGraph, Graph, Hypergraph, double_cover

from .model import Game


def _intersection_game(
    n_questions: int,
    members: Sequence[Tuple[int, ...]],
    labels: Sequence[Tuple[int, ...]],
    kind: str,
) -> Game:
    """
    Answers are sets of vertex ids; questions are the ids ``0..n_questions-1``.
    V = 1 iff each question lies in its answer, and intersecting answers are equal.
    """
    n_answers = len(members)
    if n_answers == 0:
        # no edges at all: a single answer that never wins
        table = np.zeros((n_questions, n_questions, 1, 1), dtype=bool)
        return Game(n_questions, 1, table, answer_labels=((),), kind=kind)

    contains = np.zeros((n_questions, n_answers), dtype=bool)
    sets = [frozenset(m) for m in members]
    for a, s in enumerate(sets):
        for v in s:
            if v < n_questions:
                contains[v, a] = True
    compatible = np.array(
        [[a == b or not (sets[a] & sets[b]) for b in range(n_answers)] for a in range(n_answers)],
        dtype=bool,
    )
    table = contains[:, None, :, None] & contains[None, :, None, :] & compatible[None, None, :, :]
    return Game(n_questions, n_answers, table, answer_labels=tuple(tuple(l) for l in labels), kind=kind)


def bpm_game(g: BipartiteGraph) -> Game:
    """Questions are left vertices, answers are the edges ``(l, r)`` of ``g``."""
    # right vertex r gets id n_left + r so the two sides never collide
    members = [(left, g.n_left + right) for left, right in g.edges]
    return _intersection_game(g.n_left, members, g.edges, "bpm")


def pm_game(g: Graph) -> Game:
    return _intersection_game(g.n, g.edges, g.edges, "pm")


def fpm_game(g: Graph) -> Game:
    game = bpm_game(double_cover(g))
    return Game(game.n_questions, game.n_answers, game.table, game.answer_labels, kind="fpm")


def hyper_pm_game(h: Hypergraph) -> Game:
    return _intersection_game(h.n, h.hyperedges, h.hyperedges, "hpm")


def _relation_matrix(g: Graph) -> np.ndarray:
    """0 on the diagonal, 1 for adjacent pairs, 2 for distinct non-adjacent pairs."""
    rel = np.full((g.n, g.n), 2, dtype=np.int8)
    np.fill_diagonal(rel, 0)
    for u, v in g.edges:
        rel[u, v] = rel[v, u] = 1
    return rel


def iso_constrained_game(g: Graph, h: Graph, c: BipartiteGraph) -> Game:
    """
    Questions are vertices of ``g``, answers vertices of ``h``. A pair of answers wins
    when it reproduces the equal / adjacent / distinct-non-adjacent relation of the
    questions and both (question, answer) pairs are edges of the constraint graph ``c``.
    """
    if c.n_left != g.n or c.n_right != h.n:
        raise PreconditionError(
            f"constraint graph has parts {c.n_left}+{c.n_right}, expected {g.n}+{h.n}"
        )
    if h.n == 0 or g.n == 0:
        raise PreconditionError("isomorphism games need nonempty vertex sets")
    allowed = np.zeros((g.n, h.n), dtype=bool)
    for x, y in c.edges:
        allowed[x, y] = True
    rel_g = _relation_matrix(g)
    rel_h = _relation_matrix(h)
    table = (
        (rel_g[:, :, None, None] == rel_h[None, None, :, :])
        & allowed[:, None, :, None]
        & allowed[None, :, None, :]
    )
    return Game(g.n, h.n, table, answer_labels=tuple((y,) for y in range(h.n)), kind="iso")
