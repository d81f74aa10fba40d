from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from matchgames.errors import InputError, PreconditionError, ShapeMismatchError
from matchgames.game import Game
from matchgames.utils import content_lines, parse_int

logger = logging.getLogger("matchgames.quantum.strategy")

OPERATOR_TOL = 1e-9
STATE_TOL = 1e-12

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _is_projector(p: np.ndarray) -> bool:
    return np.allclose(p, p.conj().T, atol=OPERATOR_TOL) and np.allclose(p @ p, p, atol=OPERATOR_TOL)


@dataclass(frozen=True, eq=False)
class Observable:
    """A Hermitian involution; its +1 and -1 eigenspaces give a two-outcome measurement."""
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InputError(f"observable must be square, got shape {m.shape}")
        if not np.allclose(m, m.conj().T, atol=OPERATOR_TOL):
            raise InputError("observable is not Hermitian")
        if not np.allclose(m @ m, np.eye(m.shape[0]), atol=OPERATOR_TOL):
            raise InputError("observable does not square to the identity")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def projectors(self) -> Tuple[np.ndarray, np.ndarray]:
        eye = np.eye(self.dim, dtype=complex)
        return (eye + self.matrix) / 2, (eye - self.matrix) / 2


@dataclass(frozen=True, eq=False)
class QuantumStrategy:
    """
    Shared state in ``C^dA (x) C^dB`` and one projective measurement per question and
    player. ``alice[x]`` is an array of shape ``(|A|, dA, dA)`` whose projectors sum to
    the identity; ``bob`` likewise.
    """
    d_alice: int
    d_bob: int
    state: np.ndarray
    alice: np.ndarray
    bob: np.ndarray
    _psi: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        state = np.asarray(self.state, dtype=complex).reshape(-1)
        alice = np.asarray(self.alice, dtype=complex)
        bob = np.asarray(self.bob, dtype=complex)
        if state.shape[0] != self.d_alice * self.d_bob:
            raise ShapeMismatchError(f"state has {state.shape[0]} entries, expected {self.d_alice * self.d_bob}")
        if abs(np.linalg.norm(state) - 1) > STATE_TOL:
            raise InputError(f"state norm {np.linalg.norm(state)} is not 1")
        if alice.ndim != 4 or alice.shape[2:] != (self.d_alice, self.d_alice):
            raise ShapeMismatchError(f"Alice measurements have shape {alice.shape}")
        if bob.ndim != 4 or bob.shape[2:] != (self.d_bob, self.d_bob):
            raise ShapeMismatchError(f"Bob measurements have shape {bob.shape}")
        if alice.shape[:2] != bob.shape[:2]:
            raise ShapeMismatchError("players disagree on the number of questions or answers")
        for name, pvms, d in (("Alice", alice, self.d_alice), ("Bob", bob, self.d_bob)):
            for x, pvm in enumerate(pvms):
                if not all(_is_projector(p) for p in pvm):
                    raise InputError(f"{name}'s measurement for question {x} has a non-projector")
                if not np.allclose(pvm.sum(axis=0), np.eye(d), atol=OPERATOR_TOL):
                    raise InputError(f"{name}'s measurement for question {x} does not sum to the identity")
        object.__setattr__(self, "state", state)
        object.__setattr__(self, "alice", alice)
        object.__setattr__(self, "bob", bob)
        object.__setattr__(self, "_psi", state.reshape(self.d_alice, self.d_bob))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.alice.shape[0], self.alice.shape[1]

    @classmethod
    def from_observables(
        cls,
        state: np.ndarray,
        alice: Sequence[np.ndarray],
        bob: Sequence[np.ndarray],
        n_answers: int,
        answer_pairs: Sequence[Tuple[int, int]],
    ) -> "QuantumStrategy":
        """
        Two-outcome strategy: at question ``x`` the +1 outcome answers ``answer_pairs[x][0]``
        and the -1 outcome ``answer_pairs[x][1]``; all other answers get the zero projector.
        """
        def stack(observables):
            d = observables[0].shape[0]
            out = np.zeros((len(observables), n_answers, d, d), dtype=complex)
            for x, m in enumerate(observables):
                plus, minus = Observable(m).projectors()
                out[x, answer_pairs[x][0]] += plus
                out[x, answer_pairs[x][1]] += minus
            return out

        return cls(alice[0].shape[0], bob[0].shape[0], state, stack(alice), stack(bob))

    def to_text(self) -> str:
        def rows(m: np.ndarray) -> List[str]:
            return [" ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row) for row in np.atleast_2d(m)]

        nq, na = self.shape
        lines = [f"qstrat {self.d_alice} {self.d_bob} {nq} {na}", "state"]
        lines += rows(self.state.reshape(1, -1))
        for name, pvms in (("alice", self.alice), ("bob", self.bob)):
            for x in range(nq):
                for a in range(na):
                    lines.append(f"{name} {x} {a}")
                    lines += rows(pvms[x, a])
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "QuantumStrategy":
        lines = list(content_lines(text))
        if not lines or lines[0][1][0] != "qstrat" or len(lines[0][1]) != 5:
            raise InputError("expected header 'qstrat <dA> <dB> <|X|> <|A|>'")
        no, header = lines[0]
        da, db, nq, na = (parse_int(t, no) for t in header[1:])
        it = iter(lines[1:])

        def matrix(rows: int, cols: int) -> np.ndarray:
            out = np.zeros((rows, cols), dtype=complex)
            for r in range(rows):
                no, tokens = next(it)
                if len(tokens) != 2 * cols:
                    raise InputError(f"line {no}: expected {cols} complex entries")
                values = [float(t) for t in tokens]
                out[r] = np.array(values[0::2]) + 1j * np.array(values[1::2])
            return out

        try:
            no, tokens = next(it)
            if tokens != ["state"]:
                raise InputError(f"line {no}: expected 'state'")
            state = matrix(1, da * db)[0]
            pvms = {"alice": np.zeros((nq, na, da, da), dtype=complex),
                    "bob": np.zeros((nq, na, db, db), dtype=complex)}
            for name, d in (("alice", da), ("bob", db)):
                for x in range(nq):
                    for a in range(na):
                        no, tokens = next(it)
                        if tokens != [name, str(x), str(a)]:
                            raise InputError(f"line {no}: expected '{name} {x} {a}'")
                        pvms[name][x, a] = matrix(d, d)
        except StopIteration:
            raise InputError("strategy file ends early")
        except ValueError as e:
            raise InputError(f"bad number in strategy file: {e}")
        return cls(da, db, state, pvms["alice"], pvms["bob"])


@dataclass(frozen=True)
class QuantumCorrelation:
    table: np.ndarray
    nonsignaling_residual: float
    imaginary_residual: float


def correlation_of(strategy: QuantumStrategy, game_shape: Optional[Tuple[int, int]] = None) -> QuantumCorrelation:
    """``p(a, b | x, y) = <psi| A_xa (x) B_yb |psi>`` for every entry, plus the largest marginal discrepancy."""
    if game_shape is not None and tuple(game_shape) != strategy.shape:
        raise ShapeMismatchError(f"strategy shape {strategy.shape} does not match {tuple(game_shape)}")
    psi = strategy._psi
    raw = np.einsum("ij,xaik,kl,ybjl->xyab", psi.conj(), strategy.alice, psi, strategy.bob)
    imaginary = float(np.abs(raw.imag).max()) if raw.size else 0.0
    if imaginary > OPERATOR_TOL:
        logger.warning("correlation has imaginary residue %.3g", imaginary)
    table = raw.real
    alice_marg = table.sum(axis=3)
    bob_marg = table.sum(axis=2)
    residual = max(
        float(np.abs(alice_marg - alice_marg[:, :1, :]).max()),
        float(np.abs(bob_marg - bob_marg[:1, :, :]).max()),
    )
    return QuantumCorrelation(table, residual, imaginary)


def quantum_win_prob(game: Game, strategy: QuantumStrategy) -> float:
    if game.n_questions == 0:
        return 1.0
    corr = correlation_of(strategy, game.shape)
    return float((corr.table * game.table).sum()) / game.n_questions ** 2


def maximally_entangled(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex).reshape(-1) / np.sqrt(d)


def sum_zero_observables(n: int) -> List[np.ndarray]:
    """``cos(2 pi v/n) X + sin(2 pi v/n) Z`` for ``v = 0..n-1``; ``{X, -X}`` when ``n = 2``."""
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    if n == 2:
        return [PAULI_X.copy(), -PAULI_X]
    return [np.cos(2 * np.pi * v / n) * PAULI_X + np.sin(2 * np.pi * v / n) * PAULI_Z for v in range(n)]


def kn2_answer_pairs(n: int) -> List[Tuple[int, int]]:
    """Answers of ``bpm_game(K_{n,2})`` at left vertex ``v``: edge ``(v, 0)`` is ``2v``, ``(v, 1)`` is ``2v+1``."""
    return [(2 * v, 2 * v + 1) for v in range(n)]


def synchronous_strategy(n: int) -> QuantumStrategy:
    """Maximally entangled qubits, Alice measuring ``sum_zero_observables(n)`` and Bob their conjugates."""
    observables = sum_zero_observables(n)
    return QuantumStrategy.from_observables(
        maximally_entangled(2),
        observables,
        [m.conj() for m in observables],
        2 * n,
        kn2_answer_pairs(n),
    )


def k32_optimal_strategy() -> QuantumStrategy:
    return synchronous_strategy(3)


def deterministic_strategy(f_alice: Sequence[int], f_bob: Sequence[int], n_answers: int) -> QuantumStrategy:
    nq = len(f_alice)
    alice = np.zeros((nq, n_answers, 1, 1), dtype=complex)
    bob = np.zeros((nq, n_answers, 1, 1), dtype=complex)
    for x in range(nq):
        alice[x, f_alice[x]] = 1
        bob[x, f_bob[x]] = 1
    return QuantumStrategy(1, 1, np.ones(1, dtype=complex), alice, bob)


def trivial_strategy(n: int) -> QuantumStrategy:
    """Alice always answers the edge to right vertex 0, Bob the edge to right vertex 1."""
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    pairs = kn2_answer_pairs(n)
    return deterministic_strategy([p[0] for p in pairs], [p[1] for p in pairs], 2 * n)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_state(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_strategy(n_questions: int, n_answers: int, d: int, rng: np.random.Generator) -> QuantumStrategy:
    """Each question measures a random orthonormal basis, basis vectors dealt to random answers."""
    def pvms():
        out = np.zeros((n_questions, n_answers, d, d), dtype=complex)
        for x in range(n_questions):
            u = random_unitary(d, rng)
            for k, a in enumerate(rng.integers(0, n_answers, size=d)):
                out[x, a] += np.outer(u[:, k], u[:, k].conj())
        return out

    return QuantumStrategy(d, d, random_state(d * d, rng), pvms(), pvms())


def observable_sum_norms(strategy: QuantumStrategy, answer_pairs: Sequence[Tuple[int, int]]) -> Tuple[float, float]:
    """Operator norms of ``sum_x A_x`` and ``sum_x B_x`` for a two-outcome strategy."""
    def total(pvms):
        return sum(pvms[x, p] - pvms[x, m] for x, (p, m) in enumerate(answer_pairs))

    return (
        float(np.linalg.norm(total(strategy.alice), 2)),
        float(np.linalg.norm(total(strategy.bob), 2)),
    )
