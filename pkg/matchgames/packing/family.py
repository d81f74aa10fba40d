from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping

import numpy as np

from matchgames.errors import InputError, ShapeMismatchError
from matchgames.graph import Graph

VERIFY_TOL = 1e-9


def operator_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m, 2)) if m.size else 0.0


@dataclass(frozen=True, eq=False)
class ProjectorFamily:
    """
    A ``d x d`` orthogonal projector for each index (a vertex or an edge number);
    indices without an entry carry the zero projector.
    """
    d: int
    assign: Mapping[int, np.ndarray]

    def __post_init__(self):
        if self.d < 1:
            raise InputError(f"dimension must be positive, got {self.d}")
        cleaned: Dict[int, np.ndarray] = {}
        for i, m in self.assign.items():
            m = np.asarray(m, dtype=complex)
            if m.shape != (self.d, self.d):
                raise InputError(f"projector {i} has shape {m.shape}, expected ({self.d}, {self.d})")
            if operator_norm(m - m.conj().T) > VERIFY_TOL or operator_norm(m @ m - m) > VERIFY_TOL:
                raise InputError(f"matrix {i} is not an orthogonal projector")
            cleaned[int(i)] = m
        object.__setattr__(self, "assign", dict(sorted(cleaned.items())))

    @classmethod
    def indicator(cls, members: Iterable[int]) -> "ProjectorFamily":
        """The one-dimensional family with projector 1 on ``members``."""
        return cls(1, {i: np.ones((1, 1), dtype=complex) for i in members})

    def matrix(self, i: int) -> np.ndarray:
        m = self.assign.get(i)
        return np.zeros((self.d, self.d), dtype=complex) if m is None else m

    def rank(self, i: int) -> int:
        return int(round(float(np.trace(self.matrix(i)).real)))

    def indices(self) -> Iterable[int]:
        return self.assign.keys()


def verify_packing(g: Graph, fam: ProjectorFamily) -> bool:
    """Adjacent vertices carry orthogonal projectors: ``||P_u P_v|| < 1e-9`` for every edge."""
    stray = [i for i in fam.indices() if not 0 <= i < g.n]
    if stray:
        raise ShapeMismatchError(f"family has indices {stray} outside the {g.n} vertices")
    return all(operator_norm(fam.matrix(u) @ fam.matrix(v)) < VERIFY_TOL for u, v in g.edges)


def packing_value(fam: ProjectorFamily) -> float:
    """``(1/d) sum_x Tr(P_x)``."""
    return float(sum(np.trace(m).real for m in fam.assign.values())) / fam.d
