from __future__ import annotations

import logging
import sys
from typing import Optional

from matchgames.cmd import EXIT_ABSENT, EXIT_OK, fail, print_json
from matchgames.cmd.value_command import build_game
from matchgames.corr.constructions import (
    fpm_to_ns_correlation,
    ns_from_sharp,
    ns_left_degree2_corr,
    ns_odd_cycle_corr,
)
from matchgames.corr.correlation import (
    Correlation,
    is_nonsignaling,
    is_synchronous_corr,
    nonsignaling_violation,
    winning_probability,
)
from matchgames.errors import InputError, MatchGamesError
from matchgames.exact.fractional import triangle_avoiding_fpm
from matchgames.game import Game, parse_game_text
from matchgames.graph import BipartiteGraph, Graph, Hypergraph, parse_graph_text
from matchgames.utils import short_rational

logger = logging.getLogger("matchgames.cmd.corr_command")

BUILD_KINDS = ("degree2", "sharp", "odd-cycle", "fpm")
DEFAULT_GAME = {Graph: "pm", BipartiteGraph: "bpm", Hypergraph: "hpm"}


def _read(path: str) -> str:
    with open(path) as f:
        return f.read()


def _require(g, cls, kind: str):
    if not isinstance(g, cls):
        raise InputError(f"'{kind}' needs a {'bipartite ' if cls is BipartiteGraph else ''}graph file")
    return g


def build_correlation(kind: str, text: str) -> Optional[Correlation]:
    g = parse_graph_text(text)
    if kind == "degree2":
        return ns_left_degree2_corr(_require(g, BipartiteGraph, kind))
    if kind == "sharp":
        return ns_from_sharp(_require(g, BipartiteGraph, kind))
    if kind == "odd-cycle":
        g = _require(g, Graph, kind)
        if set(g.edges) != set(Graph.cycle(g.n).edges):
            raise InputError(f"graph is not the cycle 0-1-...-{g.n - 1}-0")
        return ns_odd_cycle_corr(g.n)
    if kind == "fpm":
        g = _require(g, Graph, kind)
        f = triangle_avoiding_fpm(g)
        return None if f is None else fpm_to_ns_correlation(g, f)
    raise InputError(f"unknown correlation kind {kind!r}, expected one of {', '.join(BUILD_KINDS)}")


def command_corr_build(kind: str, path: str, output: Optional[str] = None) -> int:
    try:
        corr = build_correlation(kind, _read(path))
    except OSError as e:
        print(f"Error: cannot read {path}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    if corr is None:
        print(f"no perfect nonsignaling correlation of kind '{kind}' exists for {path}", file=sys.stderr)
        return EXIT_ABSENT
    if output:
        with open(output, "w") as f:
            f.write(corr.to_text())
        logger.info("wrote %d entries to %s", len(corr.entries), output)
    else:
        sys.stdout.write(corr.to_text())
    return EXIT_OK


def load_game(text: str, game_kind: Optional[str] = None) -> Game:
    """A ``game`` table file, or a graph file turned into the game ``game_kind`` (default by graph type)."""
    first = text.lstrip().split(None, 1)[:1]
    if first == ["game"]:
        return parse_game_text(text)
    g = parse_graph_text(text)
    return build_game(g, game_kind or DEFAULT_GAME[type(g)])


def command_corr_verify(game_path: str, corr_path: str, game_kind: Optional[str] = None, as_json: bool = False) -> int:
    try:
        game = load_game(_read(game_path), game_kind)
        corr = Correlation.from_text(_read(corr_path))
        value = winning_probability(game, corr)
    except OSError as e:
        print(f"Error: cannot read {e.filename}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    nonsignaling = is_nonsignaling(corr)
    report = {
        "winning_probability": value,
        "nonsignaling": nonsignaling,
        "synchronous": is_synchronous_corr(corr),
    }
    if not nonsignaling:
        where = nonsignaling_violation(corr)
        report["violation"] = list(where) if where else None
    if as_json:
        print_json(report)
    else:
        print(f"winning probability: {short_rational(value)}")
        print(f"nonsignaling: {'yes' if nonsignaling else 'no'}")
        print(f"synchronous: {'yes' if report['synchronous'] else 'no'}")
        if "violation" in report:
            print(f"first violation: {report['violation']}")
    return EXIT_OK if nonsignaling and value == 1 else EXIT_ABSENT
