from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from matchgames.errors import ArityMismatchError, NotSelfAdjointError, PreconditionError

from .polynomial import NCPolynomial, adjoint, alice_sum, bob_sum

logger = logging.getLogger("matchgames.ncalg.sos")

SosTerm = Tuple[Fraction, NCPolynomial]


def sos_residual(lhs: NCPolynomial, terms: Sequence[SosTerm]) -> NCPolynomial:
    """``lhs - sum c * s*s`` after checking every term is a positive multiple of a self-adjoint square."""
    residual = lhs
    for c, s in terms:
        c = Fraction(c)
        if c <= 0:
            raise PreconditionError(f"sum-of-squares coefficients must be positive, got {c}")
        if s.arity != lhs.arity:
            raise ArityMismatchError(f"term arity {s.arity} differs from {lhs.arity}")
        if adjoint(s) != s:
            raise NotSelfAdjointError(f"term is not self-adjoint:\n{s.to_text()}")
        residual = residual - c * (s * s)
    return residual


def verify_sos(lhs: NCPolynomial, terms: Sequence[SosTerm]) -> bool:
    residual = sos_residual(lhs, terms)
    if not residual.is_zero():
        logger.debug("sum-of-squares residual has %d terms", len(residual.terms))
    return residual.is_zero()


def kn2_bias_polynomial(n: int) -> NCPolynomial:
    """
    ``n^2 - sum_{v,w} (-1)^[v=w] a_v b_w``, which is ``2 n^2`` times the winning probability
    of the bipartite matching game on K_{n,2} when ``a_v`` (``b_w``) is the difference of the
    two answer projectors of question ``v`` (``w``).
    """
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    p = NCPolynomial.constant(n, n * n)
    for v in range(n):
        signs = [-1 if w == v else 1 for w in range(n)]
        p = p - NCPolynomial.a(n, v) * bob_sum(n, signs)
    return p


def k32_sos_lhs() -> NCPolynomial:
    """``6 - sum_v a_v (b_v - sum_{w != v} b_w)``: nonnegative exactly when the value is at most 5/6."""
    n = 3
    p = NCPolynomial.constant(n, 6)
    for v in range(n):
        signs = [1 if w == v else -1 for w in range(n)]
        p = p - NCPolynomial.a(n, v) * bob_sum(n, signs)
    return p


def k32_probability_lhs() -> NCPolynomial:
    """``15 - kn2_bias_polynomial(3)``, i.e. ``18 (5/6 - value)``; equal to ``k32_sos_lhs()``."""
    return NCPolynomial.constant(3, 15) - kn2_bias_polynomial(3)


def _pair_difference(n: int, i: int, j: int) -> NCPolynomial:
    return NCPolynomial.a(n, i) - NCPolynomial.a(n, j) - NCPolynomial.b(n, i) + NCPolynomial.b(n, j)


def k32_sos_terms() -> List[SosTerm]:
    n = 3
    terms = [(Fraction(1, 3), _pair_difference(n, i, j)) for i, j in combinations(range(n), 2)]
    terms.append((Fraction(1, 4), alice_sum(n) + bob_sum(n)))
    terms.append((Fraction(1, 12), alice_sum(n) - bob_sum(n)))
    return terms


def k32_two_pair_terms() -> List[SosTerm]:
    """A decomposition using only the pairs (1,3) and (1,2); it does not reproduce the left side."""
    n = 3
    return [
        (Fraction(1, 2), _pair_difference(n, 0, 2)),
        (Fraction(1, 2), _pair_difference(n, 0, 1)),
        (Fraction(1, 4), alice_sum(n) + bob_sum(n)),
        (Fraction(1, 12), alice_sum(n) - bob_sum(n)),
    ]


def synchronous_value_polynomial(n: int) -> NCPolynomial:
    """
    Winning probability of a synchronous strategy with shared observables ``a_v``:
    ``1/2 + (1/(2 n^2)) (sum_v a_v a_v - sum_{v != w} a_v a_w)``.
    """
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    inner = NCPolynomial.zero(n)
    for v in range(n):
        for w in range(n):
            sign = 1 if v == w else -1
            inner = inner + sign * (NCPolynomial.a(n, v) * NCPolynomial.a(n, w))
    return Fraction(1, 2) + Fraction(1, 2 * n * n) * inner


def synchronous_sos(n: int) -> Tuple[NCPolynomial, List[SosTerm]]:
    """``(1/2 + 1/n) - value = (1/(2 n^2)) (sum_v a_v)^2``."""
    lhs = (Fraction(1, 2) + Fraction(1, n)) - synchronous_value_polynomial(n)
    return lhs, [(Fraction(1, 2 * n * n), alice_sum(n))]


@dataclass(frozen=True)
class KN2Values:
    classical: Fraction
    quantum: Fraction
    quantum_synchronous: Fraction


def kn2_value_table(n: int) -> KN2Values:
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    sync = Fraction(1, 2) + Fraction(1, n)
    if n == 2:
        return KN2Values(Fraction(1), Fraction(1), sync)
    if n == 3:
        return KN2Values(Fraction(7, 9), Fraction(5, 6), sync)
    return KN2Values(1 - Fraction(1, n), 1 - Fraction(1, n), sync)
