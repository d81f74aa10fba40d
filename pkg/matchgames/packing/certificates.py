from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from matchgames.errors import InputError, PreconditionError
from matchgames.graph import Graph, Matching, independence_number, line_graph, maximum_matching
from matchgames.utils import content_lines, parse_int

from .family import VERIFY_TOL, ProjectorFamily, operator_norm, packing_value, verify_packing

logger = logging.getLogger("matchgames.packing.certificates")


@dataclass
class QPMReport:
    """
    Outcome of checking a family indexed by edge numbers as a perfect synchronous
    quantum strategy for the perfect matching game: edges through every vertex sum
    to the identity, and distinct edges sharing a vertex are orthogonal.
    """
    dimension: int
    completeness_residual: float = 0.0
    orthogonality_residual: float = 0.0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_qpm_certificate(g: Graph, fam: ProjectorFamily) -> QPMReport:
    report = QPMReport(dimension=fam.d)
    stray = [i for i in fam.indices() if not 0 <= i < g.m]
    if stray:
        report.violations.append(f"projectors on non-edges {stray}")
    eye = np.eye(fam.d, dtype=complex)

    for x in range(g.n):
        incident = g.incident_edges(x)
        total = sum((fam.matrix(e) for e in incident), np.zeros((fam.d, fam.d), dtype=complex))
        residual = operator_norm(total - eye)
        report.completeness_residual = max(report.completeness_residual, residual)
        if residual >= VERIFY_TOL:
            report.violations.append(f"edges at vertex {x} sum to the identity only up to {residual:.3g}")
        for i, e in enumerate(incident):
            for h in incident[i + 1:]:
                overlap = operator_norm(fam.matrix(e) @ fam.matrix(h))
                report.orthogonality_residual = max(report.orthogonality_residual, overlap)
                if overlap >= VERIFY_TOL:
                    report.violations.append(
                        f"edges {g.edges[e]} and {g.edges[h]} at vertex {x} overlap by {overlap:.3g}"
                    )
    return report


@dataclass(frozen=True)
class EquivalenceChecks:
    packing_on_line_graph: bool
    value: float
    expected_value: float
    completeness_from_value: bool
    trace_identity: bool

    @property
    def consistent(self) -> bool:
        return (
            self.packing_on_line_graph
            and abs(self.value - self.expected_value) < VERIFY_TOL
            and self.completeness_from_value
            and self.trace_identity
        )


def qpm_equiv_checks(g: Graph, fam: ProjectorFamily) -> EquivalenceChecks:
    """
    Run both directions of the correspondence between certificates and packings of the
    line graph of value ``|V|/2``. Backwards, the edges at ``x`` are pairwise orthogonal so
    their sum is a projector of trace at most ``d``; the traces add up to ``|V| d``, so each
    is exactly ``d`` and every sum is the identity.
    """
    if not verify_qpm_certificate(g, fam).passed:
        raise PreconditionError("family is not a quantum perfect matching certificate")
    on_line = verify_packing(line_graph(g), fam)
    value = packing_value(fam)

    sums = [sum((fam.matrix(e) for e in g.incident_edges(x)), np.zeros((fam.d, fam.d), dtype=complex))
            for x in range(g.n)]
    traces = [float(np.trace(s).real) for s in sums]
    edge_trace = sum(float(np.trace(fam.matrix(e)).real) for e in range(g.m))
    trace_identity = abs(sum(traces) - 2 * edge_trace) < VERIFY_TOL * max(1, g.n) and \
        abs(sum(traces) - g.n * fam.d) < VERIFY_TOL * max(1, g.n)
    eye = np.eye(fam.d, dtype=complex)
    completeness = all(
        operator_norm(s @ s - s) < VERIFY_TOL
        and t <= fam.d + VERIFY_TOL
        and abs(t - fam.d) < VERIFY_TOL
        and operator_norm(s - eye) < VERIFY_TOL
        for s, t in zip(sums, traces)
    )
    return EquivalenceChecks(on_line, value, g.n / 2, completeness, trace_identity)


def classical_certificate(g: Graph, matching: Matching) -> ProjectorFamily:
    """The one-dimensional certificate with projector 1 on each matched edge."""
    return ProjectorFamily.indicator(g.edge_index(u, v) for u, v in matching.edges)


def classical_pm_alpha_check(g: Graph) -> bool:
    """A perfect matching exists exactly when the line graph has independence number ``|V|/2``."""
    has_pm = maximum_matching(g).is_perfect(g.n)
    alpha = independence_number(line_graph(g))
    agree = has_pm == (2 * alpha == g.n)
    if not agree:
        logger.warning("matching and line-graph independence disagree on %d vertices", g.n)
    return agree


def dump_certificate(g: Graph, fam: ProjectorFamily) -> str:
    """``qpm <n> <d>``, then ``edge u v`` and ``d`` rows of ``re im`` pairs per nonzero projector."""
    lines = [f"qpm {g.n} {fam.d}"]
    for e, m in fam.assign.items():
        u, v = g.edges[e]
        lines.append(f"edge {u} {v}")
        lines += [" ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row) for row in m]
    return "\n".join(lines) + "\n"


def parse_certificate(g: Graph, text: str) -> ProjectorFamily:
    lines = list(content_lines(text))
    if not lines or lines[0][1][0] != "qpm" or len(lines[0][1]) != 3:
        raise InputError("expected header 'qpm <n> <d>'")
    no, header = lines[0]
    n, d = parse_int(header[1], no), parse_int(header[2], no)
    if n != g.n:
        raise InputError(f"certificate is for {n} vertices, graph has {g.n}")
    assign = {}
    i = 1
    while i < len(lines):
        no, tokens = lines[i]
        if len(tokens) != 3 or tokens[0] != "edge":
            raise InputError(f"line {no}: expected 'edge u v'")
        u, v = parse_int(tokens[1], no), parse_int(tokens[2], no)
        if not g.has_edge(u, v):
            raise InputError(f"line {no}: ({u}, {v}) is not an edge")
        rows = lines[i + 1:i + 1 + d]
        if len(rows) != d:
            raise InputError(f"line {no}: projector has fewer than {d} rows")
        m = np.zeros((d, d), dtype=complex)
        for r, (rno, values) in enumerate(rows):
            if len(values) != 2 * d:
                raise InputError(f"line {rno}: expected {d} complex entries")
            try:
                nums = [float(t) for t in values]
            except ValueError:
                raise InputError(f"line {rno}: bad number")
            m[r] = np.array(nums[0::2]) + 1j * np.array(nums[1::2])
        assign[g.edge_index(u, v)] = m
        i += 1 + d
    return ProjectorFamily(d, assign)


def load_certificate(g: Graph, path: str) -> ProjectorFamily:
    with open(path) as f:
        return parse_certificate(g, f.read())


def certificate_from_matching(g: Graph) -> Optional[ProjectorFamily]:
    matching = maximum_matching(g)
    return classical_certificate(g, matching) if matching.is_perfect(g.n) else None
