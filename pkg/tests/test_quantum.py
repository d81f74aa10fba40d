from __future__ import annotations

import numpy as np
import pytest

from matchgames.errors import InputError, PreconditionError, ShapeMismatchError
from matchgames.exact.nonsignaling import ns_value
from matchgames.game import bpm_game
from matchgames.graph import BipartiteGraph
from matchgames.quantum import (
    Observable,
    QuantumStrategy,
    correlation_of,
    deterministic_strategy,
    k32_optimal_strategy,
    kn2_answer_pairs,
    maximally_entangled,
    observable_sum_norms,
    quantum_win_prob,
    random_strategy,
    seesaw_sweep,
    sum_zero_observables,
    synchronous_strategy,
    trivial_strategy,
)


def kn2_game(n):
    return bpm_game(BipartiteGraph.complete(n, 2))


def test_k32_optimal_strategy_reaches_five_sixths():
    strategy = k32_optimal_strategy()
    assert abs(quantum_win_prob(kn2_game(3), strategy) - 5 / 6) < 1e-9
    norm_alice, norm_bob = observable_sum_norms(strategy, kn2_answer_pairs(3))
    assert norm_alice < 1e-9
    assert norm_bob < 1e-9


@pytest.mark.parametrize("n", [4, 5])
def test_trivial_strategy(n):
    assert abs(quantum_win_prob(kn2_game(n), trivial_strategy(n)) - (1 - 1 / n)) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_synchronous_strategy(n):
    assert abs(quantum_win_prob(kn2_game(n), synchronous_strategy(n)) - (0.5 + 1 / n)) < 1e-9


@pytest.mark.parametrize("n, bound", [(3, 5 / 6), (4, 3 / 4), (5, 4 / 5)])
def test_seesaw_stays_below_quantum_value(n, bound):
    result = seesaw_sweep(n, restarts=200, seed=0, workers=1)
    assert len(result.values) == 200
    assert result.best_value <= bound + 1e-6
    assert abs(quantum_win_prob(kn2_game(n), result.best.strategy()) - result.best_value) < 1e-9


def test_seesaw_is_reproducible_across_worker_counts():
    one = seesaw_sweep(3, restarts=8, seed=11, workers=1)
    many = seesaw_sweep(3, restarts=8, seed=11, workers=4)
    assert one.values == many.values
    assert one.seed == 11


def test_seesaw_preconditions():
    with pytest.raises(PreconditionError):
        seesaw_sweep(1)
    with pytest.raises(PreconditionError):
        seesaw_sweep(3, restarts=0)


def test_quantum_correlations_are_nonsignaling():
    rng = np.random.default_rng(3)
    strategy = random_strategy(3, 4, 2, rng)
    corr = correlation_of(strategy)
    assert corr.nonsignaling_residual < 1e-9
    assert corr.imaginary_residual < 1e-9
    assert np.allclose(corr.table.sum(axis=(2, 3)), 1)
    assert (corr.table > -1e-12).all()


def test_correlation_shape_must_match_game():
    with pytest.raises(ShapeMismatchError):
        correlation_of(synchronous_strategy(3), (4, 6))


def test_observable_validation():
    assert Observable(np.diag([1, -1])).dim == 2
    with pytest.raises(InputError):
        Observable(np.array([[1, 1], [0, -1]]))
    with pytest.raises(InputError):
        Observable(np.diag([1, 2]))
    with pytest.raises(PreconditionError):
        sum_zero_observables(1)


def test_strategy_validation():
    good = synchronous_strategy(3)
    with pytest.raises(InputError):
        QuantumStrategy(2, 2, 2 * maximally_entangled(2), good.alice, good.bob)
    with pytest.raises(ShapeMismatchError):
        QuantumStrategy(2, 2, np.ones(3) / np.sqrt(3), good.alice, good.bob)
    broken = good.alice.copy()
    broken[0, 0] = np.eye(2)
    with pytest.raises(InputError):
        QuantumStrategy(2, 2, good.state, broken, good.bob)
    with pytest.raises(ShapeMismatchError):
        QuantumStrategy(2, 2, good.state, good.alice[:2], good.bob)


def test_strategy_text():
    strategy = synchronous_strategy(3)
    text = strategy.to_text()
    assert text.startswith("qstrat 2 2 3 6\nstate\n")
    back = QuantumStrategy.from_text(text)
    assert np.allclose(back.state, strategy.state)
    assert np.allclose(back.alice, strategy.alice)
    assert abs(quantum_win_prob(kn2_game(3), back) - 5 / 6) < 1e-9
    with pytest.raises(InputError):
        QuantumStrategy.from_text(text.replace("state", "vector"))
    with pytest.raises(InputError):
        QuantumStrategy.from_text("\n".join(text.splitlines()[:5]))


def test_deterministic_strategy_gives_a_zero_one_table():
    strategy = deterministic_strategy([0, 2, 5], [0, 2, 5], 6)
    table = correlation_of(strategy).table
    assert set(np.unique(table)) <= {0.0, 1.0}
    assert table[1, 0, 2, 0] == 1
    assert table[1, 0, 2, 1] == 0
    assert abs(quantum_win_prob(kn2_game(3), strategy) - 7 / 9) < 1e-12


def test_quantum_value_below_nonsignaling_value():
    game = bpm_game(BipartiteGraph.from_edges(3, 2, [(0, 0), (0, 1), (1, 0), (2, 1)]))
    ns, _ = ns_value(game)
    rng = np.random.default_rng(5)
    for _ in range(20):
        assert quantum_win_prob(game, random_strategy(3, game.n_answers, 2, rng)) <= float(ns) + 1e-9
