from __future__ import annotations

import numpy as np
import pytest

from matchgames.errors import InputError, PreconditionError
from matchgames.game import (
    Game,
    bpm_game,
    dump_answer_labels,
    dump_game_text,
    fpm_game,
    hyper_pm_game,
    is_bisynchronous,
    is_synchronous,
    iso_constrained_game,
    parse_answer_labels,
    parse_game_text,
    pm_game,
)
from matchgames.graph import BipartiteGraph, Graph, Hypergraph, double_cover


def test_bpm_game_on_k32():
    game = bpm_game(BipartiteGraph.complete(3, 2))
    assert game.shape == (3, 6)
    # answers 2v, 2v+1 are the edges (v, 0), (v, 1)
    assert game.wins(0, 1, 0, 3)
    assert not game.wins(0, 1, 0, 2)
    assert game.wins(0, 0, 1, 1)
    assert not game.wins(0, 0, 0, 1)
    assert not game.wins(0, 1, 2, 3)
    assert game.answer_labels[3] == (1, 1)
    assert is_synchronous(game)


def test_pm_game_rules():
    game = pm_game(Graph.cycle(5))
    g = Graph.cycle(5)
    e01, e12, e34 = g.edge_index(0, 1), g.edge_index(1, 2), g.edge_index(3, 4)
    assert game.wins(0, 1, e01, e01)
    assert not game.wins(0, 1, e01, e12)
    assert game.wins(0, 3, e01, e34)
    assert not game.wins(0, 3, e12, e34)
    assert is_synchronous(game)
    assert not is_bisynchronous(game)


def test_fpm_game_is_bpm_game_of_double_cover():
    g = Graph.complete(4)
    assert fpm_game(g).same_table(bpm_game(double_cover(g)))
    assert fpm_game(g).kind == "fpm"


def test_hyper_pm_game_generalizes_pm_game():
    g = Graph.petersen()
    assert hyper_pm_game(Hypergraph.from_graph(g)).same_table(pm_game(g))


def test_edgeless_graph_game_never_wins():
    game = pm_game(Graph.edgeless(3))
    assert game.shape == (3, 1)
    assert not game.table.any()
    assert game.alice_candidates(0) == [0]


def test_games_on_the_empty_graph():
    for game in (
        pm_game(Graph.edgeless(0)),
        fpm_game(Graph.edgeless(0)),
        bpm_game(BipartiteGraph(0, 0, ())),
        hyper_pm_game(Hypergraph(0, ())),
    ):
        assert game.shape == (0, 1)
        assert game.table.size == 0
        assert is_synchronous(game)
        assert is_bisynchronous(game)
    again = parse_game_text(dump_game_text(pm_game(Graph.edgeless(0))))
    assert again.shape == (0, 1)


def test_candidates_drop_answers_that_never_win():
    game = bpm_game(BipartiteGraph.complete(2, 2))
    assert game.alice_candidates(0) == [0, 1]
    assert game.bob_candidates(1) == [2, 3]
    assert game.synchronous_candidates(1) == [2, 3]


def test_iso_constrained_game():
    c4 = Graph.cycle(4)
    everything = BipartiteGraph.complete(4, 4)
    game = iso_constrained_game(c4, c4, everything)
    assert game.shape == (4, 4)
    assert game.wins(0, 1, 0, 1)
    assert not game.wins(0, 2, 0, 1)
    assert not game.wins(0, 0, 0, 1)
    with pytest.raises(PreconditionError):
        iso_constrained_game(c4, Graph.path(3), everything)


def test_game_validation():
    with pytest.raises(InputError):
        Game(2, 2, np.zeros((2, 2, 2, 3), dtype=bool))
    with pytest.raises(InputError):
        Game(1, 0, np.zeros((1, 1, 0, 0), dtype=bool))
    with pytest.raises(InputError):
        Game(-1, 2, np.zeros((0, 0, 2, 2), dtype=bool))
    game = Game(1, 2, np.ones((1, 1, 2, 2), dtype=bool))
    with pytest.raises(ValueError):
        game.table[0, 0, 0, 0] = False


def test_game_text_and_labels():
    game = pm_game(Graph.path(3))
    text = dump_game_text(game)
    assert text.splitlines()[0] == "game 3 2"
    labels = parse_answer_labels(dump_answer_labels(game))
    again = parse_game_text(text, labels)
    assert again.same_table(game)
    assert again.answer_labels == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "game 1\n", "game 1 2\n1111\n0000\n", "game 1 2\n11x1\n"])
def test_parse_game_text_errors(text):
    with pytest.raises(InputError):
        parse_game_text(text)
