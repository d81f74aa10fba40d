from __future__ import annotations

import logging
import sys

from matchgames.cmd import EXIT_OK, fail, print_json
from matchgames.corr.classical import classical_value
from matchgames.errors import InputError, MatchGamesError
from matchgames.exact.nonsignaling import ns_value
from matchgames.game import Game, bpm_game, fpm_game, hyper_pm_game, pm_game
from matchgames.graph import AnyGraph, BipartiteGraph, Graph, Hypergraph, load_graph_file
from matchgames.utils import short_rational

logger = logging.getLogger("matchgames.cmd.value_command")

GAME_KINDS = ("bpm", "pm", "fpm", "hpm")
MODELS = ("classical", "ns")


def build_game(g: AnyGraph, kind: str) -> Game:
    if kind == "bpm":
        if not isinstance(g, BipartiteGraph):
            raise InputError("--game bpm needs a bipartite graph file")
        return bpm_game(g)
    if kind in ("pm", "fpm"):
        if not isinstance(g, Graph):
            raise InputError(f"--game {kind} needs a graph file")
        return pm_game(g) if kind == "pm" else fpm_game(g)
    if kind == "hpm":
        if isinstance(g, Graph):
            g = Hypergraph.from_graph(g)
        if not isinstance(g, Hypergraph):
            raise InputError("--game hpm needs a hypergraph or graph file")
        return hyper_pm_game(g)
    raise InputError(f"unknown game kind {kind!r}")


def command_value(path: str, game_kind: str, model: str, synchronous: bool = False, as_json: bool = False) -> int:
    try:
        game = build_game(load_graph_file(path), game_kind)
        if model == "classical":
            value, strategy = classical_value(game, synchronous=synchronous)
            witness = {"alice": list(strategy.f_alice), "bob": list(strategy.f_bob)}
        elif model == "ns":
            value, corr = ns_value(game, synchronous=synchronous)
            witness = [[x, y, a, b, p] for (x, y, a, b), p in corr.items()]
        else:
            raise InputError(f"unknown model {model!r}")
    except OSError as e:
        print(f"Error: cannot read {path}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    if as_json:
        print_json({
            "game": game_kind,
            "model": model,
            "synchronous": synchronous,
            "questions": game.n_questions,
            "answers": game.n_answers,
            "value": value,
            "witness": witness,
        })
    else:
        print(short_rational(value))
    return EXIT_OK
