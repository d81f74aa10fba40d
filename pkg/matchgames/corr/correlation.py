from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple

import numpy as np

from matchgames.errors import InputError, ShapeMismatchError
from matchgames.game import Game
from matchgames.utils import content_lines, format_rational, parse_int, parse_rational

Entry = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Correlation:
    """
    Exact conditional distribution ``p(a, b | x, y)`` over ``n_questions`` questions and
    ``n_answers`` answers. ``entries`` maps ``(x, y, a, b)`` to a positive ``Fraction``;
    zeros are not stored.
    """
    n_questions: int
    n_answers: int
    entries: Mapping[Entry, Fraction]

    def __post_init__(self):
        nx, na = self.n_questions, self.n_answers
        cleaned: Dict[Entry, Fraction] = {}
        totals: Dict[Tuple[int, int], Fraction] = defaultdict(Fraction)
        for (x, y, a, b), value in self.entries.items():
            if not (0 <= x < nx and 0 <= y < nx and 0 <= a < na and 0 <= b < na):
                raise InputError(f"entry {(x, y, a, b)} outside shape ({nx}, {na})")
            value = Fraction(value)
            if value < 0:
                raise InputError(f"negative probability {value} at {(x, y, a, b)}")
            if value:
                cleaned[(x, y, a, b)] = value
                totals[(x, y)] += value
        for x in range(nx):
            for y in range(nx):
                if totals[(x, y)] != 1:
                    raise InputError(f"p(.,.|{x},{y}) sums to {totals[(x, y)]}, not 1")
        object.__setattr__(self, "entries", dict(sorted(cleaned.items())))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_questions, self.n_answers

    def p(self, x: int, y: int, a: int, b: int) -> Fraction:
        return self.entries.get((x, y, a, b), Fraction(0))

    def items(self) -> Iterator[Tuple[Entry, Fraction]]:
        return iter(self.entries.items())

    def alice_marginal(self, x: int, y: int) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = defaultdict(Fraction)
        for (x1, y1, a, _), v in self.entries.items():
            if x1 == x and y1 == y:
                out[a] += v
        return dict(out)

    def bob_marginal(self, x: int, y: int) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = defaultdict(Fraction)
        for (x1, y1, _, b), v in self.entries.items():
            if x1 == x and y1 == y:
                out[b] += v
        return dict(out)

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.n_questions, self.n_questions, self.n_answers, self.n_answers))
        for (x, y, a, b), v in self.entries.items():
            arr[x, y, a, b] = float(v)
        return arr

    @classmethod
    def from_function(cls, n_questions: int, n_answers: int, fn) -> "Correlation":
        entries = {}
        for x in range(n_questions):
            for y in range(n_questions):
                for a in range(n_answers):
                    for b in range(n_answers):
                        v = fn(x, y, a, b)
                        if v:
                            entries[(x, y, a, b)] = Fraction(v)
        return cls(n_questions, n_answers, entries)

    @classmethod
    def uniform(cls, n_questions: int, n_answers: int) -> "Correlation":
        q = Fraction(1, n_answers * n_answers)
        return cls.from_function(n_questions, n_answers, lambda x, y, a, b: q)

    def to_text(self) -> str:
        lines = [f"corr {self.n_questions} {self.n_answers}"]
        for (x, y, a, b), v in self.entries.items():
            lines.append(f"{x} {y} {a} {b} {format_rational(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Correlation":
        lines = list(content_lines(text))
        if not lines or lines[0][1][0] != "corr" or len(lines[0][1]) != 3:
            raise InputError("expected header 'corr <|X|> <|A|>'")
        lineno, header = lines[0]
        nx, na = parse_int(header[1], lineno), parse_int(header[2], lineno)
        entries: Dict[Entry, Fraction] = {}
        for no, tokens in lines[1:]:
            if len(tokens) != 5:
                raise InputError(f"line {no}: expected 'x y a b num/den'")
            key = tuple(parse_int(t, no) for t in tokens[:4])
            if key in entries:
                raise InputError(f"line {no}: repeated entry {key}")
            entries[key] = parse_rational(tokens[4], no)
        return cls(nx, na, entries)


@dataclass(frozen=True)
class DeterministicStrategy:
    """Answer maps ``f_alice, f_bob: X -> A``."""
    f_alice: Tuple[int, ...]
    f_bob: Tuple[int, ...]

    def __post_init__(self):
        if len(self.f_alice) != len(self.f_bob):
            raise InputError("both answer maps must cover the same question set")

    @property
    def is_synchronous(self) -> bool:
        return self.f_alice == self.f_bob

    def correlation(self, n_answers: int) -> Correlation:
        n = len(self.f_alice)
        entries = {(x, y, self.f_alice[x], self.f_bob[y]): Fraction(1) for x in range(n) for y in range(n)}
        return Correlation(n, n_answers, entries)


def deterministic_correlation(answers: Sequence[int], n_answers: int) -> Correlation:
    """Both players answer question ``x`` with ``answers[x]``."""
    return DeterministicStrategy(tuple(answers), tuple(answers)).correlation(n_answers)


def winning_probability(game: Game, corr: Correlation) -> Fraction:
    if game.shape != corr.shape:
        raise ShapeMismatchError(f"correlation shape {corr.shape} does not match game shape {game.shape}")
    if game.n_questions == 0:
        return Fraction(1)
    won = sum((v for (x, y, a, b), v in corr.items() if game.table[x, y, a, b]), Fraction(0))
    return won / (game.n_questions * game.n_questions)


def _marginal_tables(corr: Correlation):
    alice: Dict[Tuple[int, int, int], Fraction] = defaultdict(Fraction)
    bob: Dict[Tuple[int, int, int], Fraction] = defaultdict(Fraction)
    for (x, y, a, b), v in corr.items():
        alice[(x, y, a)] += v
        bob[(x, y, b)] += v
    return alice, bob


def nonsignaling_violation(corr: Correlation):
    """First marginal that depends on the other player's question, or ``None``."""
    alice, bob = _marginal_tables(corr)
    n, na = corr.n_questions, corr.n_answers
    for x in range(n):
        for y in range(1, n):
            for a in range(na):
                if alice[(x, y, a)] != alice[(x, 0, a)]:
                    return ("alice", x, y, a)
    for y in range(n):
        for x in range(1, n):
            for b in range(na):
                if bob[(x, y, b)] != bob[(0, y, b)]:
                    return ("bob", x, y, b)
    return None


def is_nonsignaling(corr: Correlation) -> bool:
    return nonsignaling_violation(corr) is None


def is_synchronous_corr(corr: Correlation) -> bool:
    return all(not (x == y and a != b) for (x, y, a, b) in corr.entries)


def is_bisynchronous_corr(corr: Correlation) -> bool:
    return is_synchronous_corr(corr) and all(not (x != y and a == b) for (x, y, a, b) in corr.entries)
