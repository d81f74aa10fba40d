from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from matchgames.errors import InputError
from matchgames.utils import content_lines, parse_int

from .model import Game


def dump_game_text(game: Game) -> str:
    """
    ``game <|X|> <|A|>`` followed by one line per question pair ``(x, y)`` in
    row-major order, each holding the ``|A|*|A|`` bits ``V(x, y, a, b)`` as 0/1 digits.
    """
    lines = [f"game {game.n_questions} {game.n_answers}"]
    flat = game.table.reshape(game.n_questions * game.n_questions, game.n_answers * game.n_answers)
    for row in flat:
        lines.append("".join("1" if bit else "0" for bit in row))
    return "\n".join(lines) + "\n"


def parse_game_text(text: str, labels: Sequence[Tuple[int, ...]] = ()) -> Game:
    lines = list(content_lines(text))
    if not lines or lines[0][1][0] != "game" or len(lines[0][1]) != 3:
        raise InputError("expected header 'game <|X|> <|A|>'")
    lineno, header = lines[0]
    nx, na = parse_int(header[1], lineno), parse_int(header[2], lineno)
    body = lines[1:]
    if len(body) != nx * nx:
        raise InputError(f"expected {nx * nx} table rows, got {len(body)}")
    rows = []
    for no, tokens in body:
        bits = "".join(tokens)
        if len(bits) != na * na or set(bits) - {"0", "1"}:
            raise InputError(f"line {no}: expected {na * na} binary digits")
        rows.append([c == "1" for c in bits])
    table = np.array(rows, dtype=bool).reshape(nx, nx, na, na)
    return Game(nx, na, table, answer_labels=tuple(labels))


def dump_answer_labels(game: Game) -> str:
    """Sidecar mapping answer indices to the vertices they name: ``labels <|A|>`` then ``a v1 v2 ...``."""
    lines = [f"labels {game.n_answers}"]
    for a, label in enumerate(game.answer_labels):
        lines.append(" ".join([str(a), *(str(v) for v in label)]))
    return "\n".join(lines) + "\n"


def parse_answer_labels(text: str) -> Tuple[Tuple[int, ...], ...]:
    lines = list(content_lines(text))
    if not lines or lines[0][1][0] != "labels" or len(lines[0][1]) != 2:
        raise InputError("expected header 'labels <|A|>'")
    count = parse_int(lines[0][1][1], lines[0][0])
    labels = {}
    for no, tokens in lines[1:]:
        a = parse_int(tokens[0], no)
        if not 0 <= a < count or a in labels:
            raise InputError(f"line {no}: answer index {a} out of range or repeated")
        labels[a] = tuple(parse_int(t, no) for t in tokens[1:])
    if len(labels) != count:
        raise InputError(f"expected {count} labels, got {len(labels)}")
    return tuple(labels[a] for a in range(count))
