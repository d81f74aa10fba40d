from .constructors import bpm_game, fpm_game, hyper_pm_game, iso_constrained_game, pm_game
from .model import Game, is_bisynchronous, is_synchronous
from .textio import dump_answer_labels, dump_game_text, parse_answer_labels, parse_game_text

__all__ = [
    "Game",
    "bpm_game",
    "dump_answer_labels",
    "dump_game_text",
    "fpm_game",
    "hyper_pm_game",
    "is_bisynchronous",
    "is_synchronous",
    "iso_constrained_game",
    "parse_answer_labels",
    "parse_game_text",
    "pm_game",
]
