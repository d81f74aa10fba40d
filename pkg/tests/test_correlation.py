from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from matchgames.corr.correlation import (
    Correlation,
    DeterministicStrategy,
    deterministic_correlation,
    is_bisynchronous_corr,
    is_nonsignaling,
    is_synchronous_corr,
    nonsignaling_violation,
    winning_probability,
)
from matchgames.errors import InputError, ShapeMismatchError
from matchgames.game import pm_game
from matchgames.graph import Graph


def test_correlation_validation():
    with pytest.raises(InputError):
        Correlation(1, 2, {(0, 0, 0, 0): Fraction(1, 2)})
    with pytest.raises(InputError):
        Correlation(1, 2, {(0, 0, 0, 0): Fraction(3, 2), (0, 0, 1, 1): Fraction(-1, 2)})
    with pytest.raises(InputError):
        Correlation(1, 2, {(0, 0, 0, 2): 1})


def test_zero_entries_are_not_stored():
    corr = Correlation(1, 2, {(0, 0, 0, 0): 1, (0, 0, 1, 1): 0})
    assert list(corr.entries) == [(0, 0, 0, 0)]
    assert corr.p(0, 0, 1, 1) == 0


def test_uniform_and_deterministic_are_nonsignaling():
    assert is_nonsignaling(Correlation.uniform(3, 2))
    corr = deterministic_correlation([1, 0, 1], 2)
    assert is_nonsignaling(corr)
    assert is_synchronous_corr(corr)
    assert not is_bisynchronous_corr(corr)
    assert is_bisynchronous_corr(deterministic_correlation([0, 1], 2))


def test_signaling_correlation_is_detected():
    # Alice announces Bob's question
    corr = Correlation.from_function(2, 2, lambda x, y, a, b: Fraction(1, 2) if a == y else 0)
    assert not is_nonsignaling(corr)
    assert nonsignaling_violation(corr) == ("alice", 0, 1, 0)


def test_marginals():
    corr = Correlation.uniform(2, 2)
    assert corr.alice_marginal(0, 1) == {0: Fraction(1, 2), 1: Fraction(1, 2)}
    assert corr.bob_marginal(1, 1) == {0: Fraction(1, 2), 1: Fraction(1, 2)}
    assert np.allclose(corr.to_array().sum(axis=(2, 3)), 1.0)


def test_deterministic_strategy():
    s = DeterministicStrategy((0, 1), (0, 1))
    assert s.is_synchronous
    assert s.correlation(2).p(0, 1, 0, 1) == 1
    with pytest.raises(InputError):
        DeterministicStrategy((0,), (0, 1))


def test_winning_probability():
    g = Graph.path(4)
    game = pm_game(g)
    # the perfect matching {01, 23}
    answers = [g.edge_index(0, 1), g.edge_index(0, 1), g.edge_index(2, 3), g.edge_index(2, 3)]
    assert winning_probability(game, deterministic_correlation(answers, g.m)) == 1
    assert winning_probability(game, Correlation.uniform(4, g.m)) < 1
    with pytest.raises(ShapeMismatchError):
        winning_probability(game, Correlation.uniform(4, g.m + 1))


def test_correlation_text():
    corr = Correlation.uniform(2, 2)
    text = corr.to_text()
    assert text.splitlines()[0] == "corr 2 2"
    assert "0 1 1 0 1/4" in text
    assert Correlation.from_text(text).entries == corr.entries
    with pytest.raises(InputError):
        Correlation.from_text("corr 1 1\n0 0 0 0 1\n0 0 0 0 1\n")
    with pytest.raises(InputError):
        Correlation.from_text("corr 1 1\n0 0 0 0 one\n")
