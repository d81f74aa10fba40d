"""
Exact two-phase simplex over ``fractions.Fraction``.

The tableau is stored row-sparse (one ``dict`` per row) since the programs built
here (matching polytopes, nonsignaling polytopes) have a handful of nonzeros per
row. Pivoting follows Bland's rule in both phases, which guarantees termination.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from matchgames.errors import InputError, PreconditionError
from matchgames.utils import content_lines, format_rational, parse_int, parse_rational

logger = logging.getLogger("matchgames.exact.simplex")

RELATIONS = ("<=", "=", ">=")

Coefficients = Tuple[Tuple[int, Fraction], ...]
CoefficientsLike = Union[Mapping[int, object], Sequence[object]]


def _sparse(coeffs: CoefficientsLike) -> Coefficients:
    items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
    merged: Dict[int, Fraction] = {}
    for j, v in items:
        q = Fraction(v)
        if q:
            merged[int(j)] = merged.get(int(j), Fraction(0)) + q
    return tuple(sorted((j, v) for j, v in merged.items() if v))


@dataclass(frozen=True)
class Constraint:
    coefficients: Coefficients
    relation: str
    rhs: Fraction

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((v * point[j] for j, v in self.coefficients), Fraction(0))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        lhs = self.evaluate(point)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """
    ``maximize`` (or minimize) ``objective . x`` subject to ``constraints`` and
    ``x_j >= lower_bounds[j]``; a lower bound of ``None`` marks a free variable.
    Coefficient vectors are stored sparsely as ``(index, value)`` pairs.
    """
    num_vars: int
    objective: Coefficients
    constraints: Tuple[Constraint, ...]
    lower_bounds: Tuple[Optional[Fraction], ...]
    maximize: bool = True

    def __post_init__(self):
        if len(self.lower_bounds) != self.num_vars:
            raise InputError(f"expected {self.num_vars} lower bounds, got {len(self.lower_bounds)}")
        for j, _ in self.objective:
            if not 0 <= j < self.num_vars:
                raise InputError(f"objective index {j} out of range")
        for c in self.constraints:
            if c.relation not in RELATIONS:
                raise InputError(f"unknown relation {c.relation!r}")
            for j, _ in c.coefficients:
                if not 0 <= j < self.num_vars:
                    raise InputError(f"constraint index {j} out of range")

    @classmethod
    def build(
        cls,
        num_vars: int,
        objective: CoefficientsLike,
        constraints: Iterable[Tuple[CoefficientsLike, str, object]],
        lower_bounds: Optional[Sequence[Optional[object]]] = None,
        maximize: bool = True,
    ) -> "LinearProgram":
        bounds = (
            tuple(Fraction(0) for _ in range(num_vars))
            if lower_bounds is None
            else tuple(None if b is None else Fraction(b) for b in lower_bounds)
        )
        return cls(
            num_vars=num_vars,
            objective=_sparse(objective),
            constraints=tuple(Constraint(_sparse(a), rel, Fraction(b)) for a, rel, b in constraints),
            lower_bounds=bounds,
            maximize=maximize,
        )

    def dense_row(self, k: int) -> List[Fraction]:
        row = [Fraction(0)] * self.num_vars
        for j, v in self.constraints[k].coefficients:
            row[j] = v
        return row

    def objective_value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((v * point[j] for j, v in self.objective), Fraction(0))

    def is_feasible_point(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.num_vars:
            return False
        for x, lb in zip(point, self.lower_bounds):
            if lb is not None and x < lb:
                return False
        return all(c.satisfied_by(point) for c in self.constraints)

    def to_text(self) -> str:
        lines = [f"lp {self.num_vars} {'max' if self.maximize else 'min'}"]
        lines.append("objective " + " ".join(f"{j}:{format_rational(v)}" for j, v in self.objective))
        lines.append("lower " + " ".join("-" if b is None else format_rational(b) for b in self.lower_bounds))
        for c in self.constraints:
            terms = " ".join(f"{j}:{format_rational(v)}" for j, v in c.coefficients)
            lines.append(f"st {c.relation} {format_rational(c.rhs)} {terms}".rstrip())
        return "\n".join(line.rstrip() for line in lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LinearProgram":
        lines = list(content_lines(text))
        if not lines or lines[0][1][0] != "lp" or len(lines[0][1]) != 3:
            raise InputError("expected header 'lp <num_vars> max|min'")
        lineno, header = lines[0]
        num_vars = parse_int(header[1], lineno)
        if header[2] not in ("max", "min"):
            raise InputError(f"line {lineno}: sense must be max or min")
        objective: Dict[int, Fraction] = {}
        bounds: Optional[List[Optional[Fraction]]] = None
        constraints = []

        def terms(tokens, no):
            out = {}
            for tok in tokens:
                if ":" not in tok:
                    raise InputError(f"line {no}: expected index:coefficient, got {tok!r}")
                j, v = tok.split(":", 1)
                out[parse_int(j, no)] = parse_rational(v, no)
            return out

        for no, tokens in lines[1:]:
            if tokens[0] == "objective":
                objective = terms(tokens[1:], no)
            elif tokens[0] == "lower":
                bounds = [None if t == "-" else parse_rational(t, no) for t in tokens[1:]]
            elif tokens[0] == "st" and len(tokens) >= 3:
                constraints.append((terms(tokens[3:], no), tokens[1], parse_rational(tokens[2], no)))
            else:
                raise InputError(f"line {no}: unrecognised LP line")
        return cls.build(num_vars, objective, constraints, bounds, maximize=header[2] == "max")


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Unbounded:
    pass


LPResult = Union[Optimal, Infeasible, Unbounded]


class SimplexSolver:
    """Owns one tableau; ``solve`` may be called once."""

    def __init__(self, lp: LinearProgram):
        self.lp = lp
        self.pivots = 0
        self._solved = False

    def solve(self) -> LPResult:
        if self._solved:
            raise RuntimeError("SimplexSolver instances solve exactly once")
        self._solved = True

        lp = self.lp
        # structural columns: one per bounded variable, two (x+, x-) per free one
        columns: List[Tuple[int, int]] = []
        pos_col: List[int] = []
        neg_col: List[Optional[int]] = []
        for j, lb in enumerate(lp.lower_bounds):
            pos_col.append(len(columns))
            columns.append((j, 1))
            if lb is None:
                neg_col.append(len(columns))
                columns.append((j, -1))
            else:
                neg_col.append(None)
        n_struct = len(columns)

        def shifted(coeffs: Coefficients) -> Tuple[Dict[int, Fraction], Fraction]:
            row: Dict[int, Fraction] = {}
            offset = Fraction(0)
            for j, v in coeffs:
                row[pos_col[j]] = v
                if neg_col[j] is not None:
                    row[neg_col[j]] = -v
                elif lp.lower_bounds[j]:
                    offset += v * lp.lower_bounds[j]
            return row, offset

        raw_rows = []
        for c in lp.constraints:
            row, offset = shifted(c.coefficients)
            rhs = c.rhs - offset
            relation = c.relation
            if rhs < 0:
                row = {j: -v for j, v in row.items()}
                rhs = -rhs
                relation = {"<=": ">=", ">=": "<=", "=": "="}[relation]
            raw_rows.append((row, relation, rhs))

        next_col = n_struct
        rows: List[Dict[int, Fraction]] = []
        rhs_list: List[Fraction] = []
        basis: List[int] = []
        needs_artificial: List[int] = []
        for i, (row, relation, rhs) in enumerate(raw_rows):
            row = dict(row)
            if relation == "<=":
                row[next_col] = Fraction(1)
                basis.append(next_col)
                next_col += 1
            else:
                if relation == ">=":
                    row[next_col] = Fraction(-1)
                    next_col += 1
                basis.append(-1)
                needs_artificial.append(i)
            rows.append(row)
            rhs_list.append(rhs)
        first_artificial = next_col
        for i in needs_artificial:
            rows[i][next_col] = Fraction(1)
            basis[i] = next_col
            next_col += 1

        self._rows, self._rhs, self._basis = rows, rhs_list, basis

        # phase 1: maximize minus the sum of artificials
        if needs_artificial:
            cost: Dict[int, Fraction] = {a: Fraction(-1) for a in range(first_artificial, next_col)}
            value = Fraction(0)
            for i in needs_artificial:
                for j, v in rows[i].items():
                    cost[j] = cost.get(j, Fraction(0)) + v
                value -= rhs_list[i]
            cost = {j: v for j, v in cost.items() if v}
            status, value = self._iterate(cost, value)
            if value < 0:
                logger.debug("infeasible after %d pivots", self.pivots)
                return Infeasible()
            self._drop_artificials(first_artificial)

        # phase 2
        objective: Dict[int, Fraction] = {}
        constant = Fraction(0)
        sign = 1 if lp.maximize else -1
        for j, v in lp.objective:
            v = sign * v
            objective[pos_col[j]] = v
            if neg_col[j] is not None:
                objective[neg_col[j]] = -v
            elif lp.lower_bounds[j]:
                constant += v * lp.lower_bounds[j]
        cost = dict(objective)
        value = Fraction(0)
        for i, row in enumerate(self._rows):
            cb = objective.get(self._basis[i])
            if cb:
                for j, v in row.items():
                    cost[j] = cost.get(j, Fraction(0)) - cb * v
                value += cb * self._rhs[i]
        cost = {j: v for j, v in cost.items() if v}
        status, value = self._iterate(cost, value)
        if status == "unbounded":
            logger.debug("unbounded after %d pivots", self.pivots)
            return Unbounded()

        values = [Fraction(0)] * next_col
        for i, b in enumerate(self._basis):
            values[b] = self._rhs[i]
        point = []
        for j, lb in enumerate(lp.lower_bounds):
            if lb is None:
                point.append(values[pos_col[j]] - values[neg_col[j]])
            else:
                point.append(lb + values[pos_col[j]])
        point_t = tuple(point)
        if not lp.is_feasible_point(point_t):
            raise RuntimeError("simplex produced a point violating its own constraints")
        optimum = sign * (value + constant)
        logger.debug("optimal value %s after %d pivots", optimum, self.pivots)
        return Optimal(value=optimum, point=point_t)

    def _iterate(self, cost: Dict[int, Fraction], value: Fraction) -> Tuple[str, Fraction]:
        rows, rhs, basis = self._rows, self._rhs, self._basis
        while True:
            entering = min((j for j, d in cost.items() if d > 0), default=None)
            if entering is None:
                return "optimal", value
            leave = -1
            best: Optional[Tuple[Fraction, int]] = None
            for i, row in enumerate(rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    key = (rhs[i] / a, basis[i])
                    if best is None or key < best:
                        best, leave = key, i
            if leave < 0:
                return "unbounded", value
            value = self._pivot(leave, entering, cost, value)

    def _pivot(self, r: int, c: int, cost: Dict[int, Fraction], value: Fraction) -> Fraction:
        self.pivots += 1
        rows, rhs = self._rows, self._rhs
        p = rows[r][c]
        if p != 1:
            rows[r] = {j: v / p for j, v in rows[r].items()}
            rhs[r] = rhs[r] / p
        pivot_row = rows[r]
        pivot_rhs = rhs[r]

        def eliminate(target: Dict[int, Fraction], factor: Fraction) -> None:
            for j, v in pivot_row.items():
                nv = target.get(j, Fraction(0)) - factor * v
                if nv:
                    target[j] = nv
                else:
                    target.pop(j, None)

        for i, row in enumerate(rows):
            if i == r:
                continue
            a = row.get(c)
            if a:
                eliminate(row, a)
                rhs[i] -= a * pivot_rhs
        d = cost.get(c)
        if d:
            eliminate(cost, d)
            value += d * pivot_rhs
        self._basis[r] = c
        return value

    def _drop_artificials(self, first_artificial: int) -> None:
        rows, rhs, basis = self._rows, self._rhs, self._basis
        scratch: Dict[int, Fraction] = {}
        i = 0
        while i < len(rows):
            if basis[i] >= first_artificial:
                candidates = [j for j, v in rows[i].items() if j < first_artificial and v]
                if candidates:
                    self._pivot(i, min(candidates), scratch, Fraction(0))
                else:
                    # redundant equality row
                    del rows[i], rhs[i], basis[i]
                    continue
            i += 1
        for k, row in enumerate(rows):
            rows[k] = {j: v for j, v in row.items() if j < first_artificial}


def solve_lp(lp: LinearProgram) -> LPResult:
    return SimplexSolver(lp).solve()


def dual_program(lp: LinearProgram) -> LinearProgram:
    """
    Dual of a maximization program whose variables are non-negative or free:
    ``min b.y`` with ``y_i >= 0`` for ``<=`` rows, free ``y_i`` for ``=`` rows
    (``>=`` rows are negated first), and one dual row per primal variable.
    """
    if not lp.maximize:
        raise PreconditionError("dual_program expects a maximization program")
    for lb in lp.lower_bounds:
        if lb is not None and lb != 0:
            raise PreconditionError("dual_program expects zero or free lower bounds")

    rows = []
    for c in lp.constraints:
        if c.relation == ">=":
            rows.append(([(j, -v) for j, v in c.coefficients], "<=", -c.rhs))
        else:
            rows.append((list(c.coefficients), c.relation, c.rhs))

    columns: List[Dict[int, Fraction]] = [dict() for _ in range(lp.num_vars)]
    for i, (coeffs, _, _) in enumerate(rows):
        for j, v in coeffs:
            columns[j][i] = v
    objective = dict(lp.objective)
    constraints = [
        (columns[j], ">=" if lp.lower_bounds[j] is not None else "=", objective.get(j, 0))
        for j in range(lp.num_vars)
    ]
    bounds = [Fraction(0) if rel == "<=" else None for _, rel, _ in rows]
    return LinearProgram.build(
        len(rows),
        {i: rhs for i, (_, _, rhs) in enumerate(rows)},
        constraints,
        bounds,
        maximize=False,
    )
