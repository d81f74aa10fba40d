from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchgames.corr.classical import classical_value
from matchgames.errors import ArityMismatchError, InputError, NotSelfAdjointError, PreconditionError
from matchgames.game import bpm_game
from matchgames.graph import BipartiteGraph
from matchgames.ncalg import (
    NCPolynomial,
    adjoint,
    alice_sum,
    bob_sum,
    evaluate,
    is_self_adjoint,
    k32_probability_lhs,
    k32_sos_lhs,
    k32_sos_terms,
    k32_two_pair_terms,
    kn2_bias_polynomial,
    kn2_value_table,
    normalize_tokens,
    sos_residual,
    synchronous_sos,
    synchronous_value_polynomial,
    verify_sos,
)
from matchgames.ncalg.polynomial import format_word, word_tokens
from matchgames.quantum import maximally_entangled, sum_zero_observables
from matchgames.quantum.strategy import random_unitary

tokens = st.lists(st.tuples(st.sampled_from("ab"), st.integers(0, 2)), max_size=12)


def a(i, n=3):
    return NCPolynomial.a(n, i)


def b(j, n=3):
    return NCPolynomial.b(n, j)


def test_generators_are_commuting_involutions():
    one = NCPolynomial.constant(3, 1)
    assert a(0) * a(0) == one
    assert b(2) * b(2) == one
    assert b(1) * a(0) == a(0) * b(1)
    assert a(0) * a(1) != a(1) * a(0)


@given(tokens)
def test_rewriting_is_confluent(seq):
    left = normalize_tokens(seq, "leftmost")
    right = normalize_tokens(seq, "rightmost")
    assert left == right
    assert normalize_tokens(word_tokens(left)) == left


def test_unknown_rewriting_strategy():
    with pytest.raises(ValueError):
        normalize_tokens([], "outermost")


def test_adjoint_reverses_words():
    p = a(0) * a(1) * b(2) * b(0)
    assert adjoint(p) == a(1) * a(0) * b(0) * b(2)
    assert not is_self_adjoint(p)
    assert is_self_adjoint(p + adjoint(p))
    assert is_self_adjoint((alice_sum(3) + bob_sum(3)) * (alice_sum(3) + bob_sum(3)))


def test_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        a(0, n=2) + a(0, n=3)
    with pytest.raises(ArityMismatchError):
        a(0, n=2) * b(0, n=3)
    with pytest.raises(InputError):
        NCPolynomial(2, {((5,), ()): 1})


def test_polynomial_text():
    p = Fraction(1, 2) - 3 * a(0) * b(1) + a(2) * a(1)
    text = p.to_text()
    assert text.splitlines()[0] == "ncpoly 3"
    assert "1/2 * 1" in text
    assert "-3 * a1 b2" in text
    assert NCPolynomial.from_text(text) == p
    assert format_word(((0, 2), (1,))) == "a1 a3 b2"
    with pytest.raises(InputError):
        NCPolynomial.from_text("ncpoly 2\n1 * c1\n")


def test_k32_certificate():
    lhs = k32_sos_lhs()
    assert lhs == k32_probability_lhs()
    assert verify_sos(lhs, k32_sos_terms())


def test_k32_two_pair_certificate_does_not_hold():
    residual = sos_residual(k32_sos_lhs(), k32_two_pair_terms())
    assert not residual.is_zero()
    assert not verify_sos(k32_sos_lhs(), k32_two_pair_terms())


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_synchronous_certificate(n):
    lhs, terms = synchronous_sos(n)
    assert verify_sos(lhs, terms)


def test_single_coefficient_perturbations_fail():
    lhs = k32_sos_lhs()
    terms = k32_sos_terms()
    for k in range(len(terms)):
        bumped = list(terms)
        c, s = bumped[k]
        bumped[k] = (c + Fraction(1, 100), s)
        assert not verify_sos(lhs, bumped)
    assert not verify_sos(lhs + Fraction(1, 100), terms)
    for n in range(2, 7):
        lhs, terms = synchronous_sos(n)
        assert not verify_sos(lhs, [(terms[0][0] * 2, terms[0][1])])


def test_sos_term_checks():
    lhs = k32_sos_lhs()
    with pytest.raises(PreconditionError):
        sos_residual(lhs, [(Fraction(-1), alice_sum(3))])
    with pytest.raises(NotSelfAdjointError):
        sos_residual(lhs, [(Fraction(1), a(0) * a(1))])
    with pytest.raises(ArityMismatchError):
        sos_residual(lhs, [(Fraction(1), alice_sum(2))])


def test_bias_polynomial_matches_left_side():
    assert NCPolynomial.constant(3, 15) - kn2_bias_polynomial(3) == k32_sos_lhs()
    with pytest.raises(PreconditionError):
        kn2_bias_polynomial(1)


def test_optimal_qubit_observables_saturate_the_bound():
    observables = sum_zero_observables(3)
    op = evaluate(k32_sos_lhs(), observables, [m.conj() for m in observables])
    psi = maximally_entangled(2)
    assert abs(psi.conj() @ op @ psi) < 1e-9
    assert np.linalg.eigvalsh((op + op.conj().T) / 2).min() > -1e-9


def test_synchronous_value_on_shared_observables():
    n = 4
    observables = sum_zero_observables(n)
    op = evaluate(synchronous_value_polynomial(n), observables, [np.eye(2)] * n)
    psi = maximally_entangled(2)
    assert abs((psi.conj() @ op @ psi).real - (0.5 + 1 / n)) < 1e-9


def test_value_table():
    assert kn2_value_table(2).classical == 1
    k32 = kn2_value_table(3)
    assert (k32.classical, k32.quantum, k32.quantum_synchronous) == (Fraction(7, 9), Fraction(5, 6), Fraction(5, 6))
    k52 = kn2_value_table(5)
    assert (k52.classical, k52.quantum, k52.quantum_synchronous) == (Fraction(4, 5), Fraction(4, 5), Fraction(7, 10))
    with pytest.raises(PreconditionError):
        kn2_value_table(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_value_table_classical_column_matches_enumeration(n):
    value, _ = classical_value(bpm_game(BipartiteGraph.complete(n, 2)))
    assert kn2_value_table(n).classical == value


def test_square_expansion():
    s = NCPolynomial.a(1, 0) + NCPolynomial.b(1, 0)
    assert s * s == 2 + 2 * (NCPolynomial.a(1, 0) * NCPolynomial.b(1, 0))


@given(st.lists(st.tuples(tokens, st.fractions(max_denominator=7)), max_size=6))
def test_adjoint_is_an_involution(raw):
    p = NCPolynomial.zero(3)
    for seq, c in raw:
        p = p + NCPolynomial(3, {normalize_tokens(seq): c})
    assert adjoint(adjoint(p)) == p


def _random_involutions(n, d, rng):
    out = []
    for _ in range(n):
        u = random_unitary(d, rng)
        out.append((u * rng.choice([-1.0, 1.0], size=d)) @ u.conj().T)
    return out


@pytest.mark.parametrize("seed", range(5))
def test_certificates_vanish_on_matrices(seed):
    rng = np.random.default_rng(seed)
    cases = [(k32_sos_lhs(), k32_sos_terms())] + [synchronous_sos(n) for n in (2, 4)]
    for lhs, terms in cases:
        n = lhs.arity
        alice, bob = _random_involutions(n, 3, rng), _random_involutions(n, 2, rng)
        residual = evaluate(lhs, alice, bob)
        for c, s in terms:
            m = evaluate(s, alice, bob)
            residual = residual - float(c) * (m @ m)
        assert np.linalg.norm(residual, 2) < 1e-9
