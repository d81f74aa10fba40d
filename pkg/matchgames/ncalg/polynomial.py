"""
Polynomials over the rationals in two commuting families of involutions.

Generators ``a_1..a_n`` (Alice) and ``b_1..b_n`` (Bob) satisfy ``g*g = 1`` and
``b_j a_i = a_i b_j``; inside each family nothing commutes. A normal-form word is
therefore a pair ``(alice, bob)`` of index tuples without equal neighbours.
Indices are stored 0-based and printed 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np

from matchgames.errors import ArityMismatchError, InputError
from matchgames.utils import content_lines, parse_int, parse_rational, short_rational

NCWord = Tuple[Tuple[int, ...], Tuple[int, ...]]
Token = Tuple[str, int]
Scalar = Union[int, Fraction]

EMPTY: NCWord = ((), ())


def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for g in letters:
        if stack and stack[-1] == g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def word_key(word: NCWord):
    """Canonical order: shorter words first, then lexicographic with a-letters before b-letters."""
    alice, bob = word
    return (len(alice) + len(bob), tuple(("a", i) for i in alice) + tuple(("b", j) for j in bob))


def word_product(u: NCWord, v: NCWord) -> NCWord:
    return _reduce(u[0] + v[0]), _reduce(u[1] + v[1])


def normalize_tokens(tokens: Sequence[Token], strategy: str = "leftmost") -> NCWord:
    """
    Rewrite a raw generator sequence with ``b a -> a b`` and ``g g -> 1``, always firing
    the leftmost (or rightmost) redex. Both strategies reach the same normal form.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown rewriting strategy {strategy!r}")
    seq = list(tokens)
    while True:
        positions = range(len(seq) - 1) if strategy == "leftmost" else range(len(seq) - 2, -1, -1)
        for i in positions:
            left, right = seq[i], seq[i + 1]
            if left == right:
                del seq[i:i + 2]
                break
            if left[0] == "b" and right[0] == "a":
                seq[i], seq[i + 1] = right, left
                break
        else:
            break
    alice = tuple(i for kind, i in seq if kind == "a")
    bob = tuple(j for kind, j in seq if kind == "b")
    return alice, bob


def word_tokens(word: NCWord) -> List[Token]:
    return [("a", i) for i in word[0]] + [("b", j) for j in word[1]]


def format_word(word: NCWord) -> str:
    if word == EMPTY:
        return "1"
    return " ".join(f"{kind}{i + 1}" for kind, i in word_tokens(word))


@dataclass(frozen=True)
class NCPolynomial:
    arity: int
    terms: Mapping[NCWord, Fraction]

    def __post_init__(self):
        cleaned: Dict[NCWord, Fraction] = {}
        for (alice, bob), c in self.terms.items():
            for i in alice + bob:
                if not 0 <= i < self.arity:
                    raise InputError(f"generator index {i + 1} outside 1..{self.arity}")
            word = (_reduce(alice), _reduce(bob))
            c = Fraction(c)
            cleaned[word] = cleaned.get(word, Fraction(0)) + c
        ordered = sorted(((w, c) for w, c in cleaned.items() if c), key=lambda t: word_key(t[0]))
        object.__setattr__(self, "terms", dict(ordered))

    @classmethod
    def zero(cls, arity: int) -> "NCPolynomial":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, c: Scalar) -> "NCPolynomial":
        return cls(arity, {EMPTY: Fraction(c)})

    @classmethod
    def a(cls, arity: int, i: int) -> "NCPolynomial":
        """Alice generator ``a_{i+1}``."""
        return cls(arity, {((i,), ()): Fraction(1)})

    @classmethod
    def b(cls, arity: int, j: int) -> "NCPolynomial":
        return cls(arity, {((), (j,)): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: NCWord) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def _lift(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            if other.arity != self.arity:
                raise ArityMismatchError(f"arities {self.arity} and {other.arity} differ")
            return other
        return NCPolynomial.constant(self.arity, other)

    def __add__(self, other) -> "NCPolynomial":
        return nc_add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self) -> "NCPolynomial":
        return nc_scale(self, -1)

    def __sub__(self, other) -> "NCPolynomial":
        return nc_add(self, nc_scale(self._lift(other), -1))

    def __rsub__(self, other) -> "NCPolynomial":
        return nc_add(self._lift(other), nc_scale(self, -1))

    def __mul__(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            return nc_multiply(self, other)
        return nc_scale(self, other)

    def __rmul__(self, other) -> "NCPolynomial":
        return nc_scale(self, other)

    def to_text(self) -> str:
        lines = [f"ncpoly {self.arity}"]
        lines += [f"{short_rational(c)} * {format_word(w)}" for w, c in self.terms.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "NCPolynomial":
        lines = list(content_lines(text))
        if not lines or lines[0][1][0] != "ncpoly" or len(lines[0][1]) != 2:
            raise InputError("expected header 'ncpoly <n>'")
        arity = parse_int(lines[0][1][1], lines[0][0])
        out = cls.zero(arity)
        for no, tokens in lines[1:]:
            if len(tokens) < 2 or tokens[1] != "*":
                raise InputError(f"line {no}: expected 'coeff * word'")
            letters: List[Token] = []
            for t in tokens[2:]:
                if t == "1":
                    continue
                if t[0] not in "ab":
                    raise InputError(f"line {no}: bad generator {t!r}")
                letters.append((t[0], parse_int(t[1:], no) - 1))
            word = normalize_tokens(letters)
            out = out + cls(arity, {word: parse_rational(tokens[0], no)})
        return out


def nc_add(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    if p.arity != q.arity:
        raise ArityMismatchError(f"arities {p.arity} and {q.arity} differ")
    terms = dict(p.terms)
    for w, c in q.terms.items():
        terms[w] = terms.get(w, Fraction(0)) + c
    return NCPolynomial(p.arity, terms)


def nc_scale(p: NCPolynomial, c: Scalar) -> NCPolynomial:
    c = Fraction(c)
    return NCPolynomial(p.arity, {w: c * v for w, v in p.terms.items()})


def nc_multiply(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    if p.arity != q.arity:
        raise ArityMismatchError(f"arities {p.arity} and {q.arity} differ")
    terms: Dict[NCWord, Fraction] = {}
    for u, c in p.terms.items():
        for v, d in q.terms.items():
            w = word_product(u, v)
            terms[w] = terms.get(w, Fraction(0)) + c * d
    return NCPolynomial(p.arity, terms)


def adjoint(p: NCPolynomial) -> NCPolynomial:
    """Reverse every word; generators are self-adjoint and coefficients real."""
    return NCPolynomial(p.arity, {(w[0][::-1], w[1][::-1]): c for w, c in p.terms.items()})


def is_self_adjoint(p: NCPolynomial) -> bool:
    return adjoint(p) == p


def alice_sum(n: int, signs: Sequence[int] = ()) -> NCPolynomial:
    signs = signs or [1] * n
    return sum((s * NCPolynomial.a(n, i) for i, s in enumerate(signs)), NCPolynomial.zero(n))


def bob_sum(n: int, signs: Sequence[int] = ()) -> NCPolynomial:
    signs = signs or [1] * n
    return sum((s * NCPolynomial.b(n, j) for j, s in enumerate(signs)), NCPolynomial.zero(n))


def evaluate(p: NCPolynomial, alice: Sequence[np.ndarray], bob: Sequence[np.ndarray]) -> np.ndarray:
    """
    Substitute matrices for the generators: ``a_i`` acts as ``alice[i]`` on the first
    tensor factor and ``b_j`` as ``bob[j]`` on the second.
    """
    if len(alice) != p.arity or len(bob) != p.arity:
        raise ArityMismatchError(f"need {p.arity} matrices per party")
    da, db = alice[0].shape[0], bob[0].shape[0]
    out = np.zeros((da * db, da * db), dtype=complex)
    for (aw, bw), c in p.terms.items():
        left = np.eye(da, dtype=complex)
        for i in aw:
            left = left @ alice[i]
        right = np.eye(db, dtype=complex)
        for j in bw:
            right = right @ bob[j]
        out += float(c) * np.kron(left, right)
    return out
