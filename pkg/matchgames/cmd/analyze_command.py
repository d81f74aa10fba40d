from __future__ import annotations

import logging
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from matchgames import __version__
from matchgames.cmd import EXIT_OK, fail, print_json
from matchgames.corr.classical import classical_value
from matchgames.corr.correlation import Correlation
from matchgames.errors import MatchGamesError, SizeLimitError
from matchgames.exact.fractional import FractionalMatching, fractional_pm, triangle_avoiding_fpm
from matchgames.exact.nonsignaling import ns_perfect_correlation, ns_value
from matchgames.game import Game, bpm_game, hyper_pm_game, pm_game
from matchgames.graph import (
    AnyGraph,
    BipartiteGraph,
    Graph,
    HallViolator,
    Hypergraph,
    double_cover,
    hyper_perfect_matching,
    l_perfect_matching,
    load_graph_file,
    maximum_matching,
    sharp_reduction,
)
from matchgames.utils import short_rational
from matchgames.utils.table import print_table

logger = logging.getLogger("matchgames.cmd.analyze_command")


@dataclass
class Status:
    holds: bool
    witness: Any = None
    method: str = ""


@dataclass
class AnalysisReport:
    """
    Everything ``analyze`` learns about one input. Each status carries its witness
    (or violator); the NS statuses are computed twice, once by the combinatorial
    characterization and once by linear programming, and must agree.
    """
    source: str
    kind: str
    vertices: int
    edges: int
    statuses: Dict[str, Status] = field(default_factory=dict)
    values: Dict[str, Optional[Fraction]] = field(default_factory=dict)
    agreement: Dict[str, bool] = field(default_factory=dict)
    elapsed: float = 0.0
    version: str = __version__

    @property
    def consistent(self) -> bool:
        return all(self.agreement.values())

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "input": {"source": self.source, "kind": self.kind, "vertices": self.vertices, "edges": self.edges},
            "statuses": {
                name: {"holds": s.holds, "method": s.method, "witness": s.witness}
                for name, s in self.statuses.items()
            },
            "values": {name: ("skipped" if v is None else v) for name, v in self.values.items()},
            "agreement": dict(self.agreement),
            "version": self.version,
        }
        if timing:
            out["timing_seconds"] = round(self.elapsed, 6)
        return out


def _edge_list(edges) -> List[List[int]]:
    return [[u, v] for u, v in edges]


def _fpm_witness(f: FractionalMatching) -> Dict[str, Fraction]:
    return {f"{u}-{v}": w for (u, v), w in f.weights.items() if w}


def _corr_witness(corr: Correlation) -> List[List[Any]]:
    return [[x, y, a, b, p] for (x, y, a, b), p in corr.items()]


def _value(fn: Callable[[], Fraction], name: str) -> Optional[Fraction]:
    try:
        return fn()
    except SizeLimitError as e:
        logger.info("%s skipped: %s", name, e.error_message)
        return None


def _game_values(report: AnalysisReport, game: Game, synchronous: bool) -> None:
    report.values["classical"] = _value(lambda: classical_value(game)[0], "classical")
    report.values["nonsignaling"] = _value(lambda: ns_value(game)[0], "nonsignaling")
    if synchronous:
        report.values["classical_sync"] = _value(lambda: classical_value(game, synchronous=True)[0], "classical_sync")
        report.values["nonsignaling_sync"] = _value(lambda: ns_value(game, synchronous=True)[0], "nonsignaling_sync")


def _analyze_graph(report: AnalysisReport, g: Graph) -> None:
    matching = maximum_matching(g)
    report.statuses["classical_pm"] = Status(matching.is_perfect(g.n), _edge_list(matching.edges), "maximum matching")

    fpm = fractional_pm(g)
    report.statuses["fpm"] = Status(fpm is not None, _fpm_witness(fpm) if fpm else None, "exact LP")
    cover = l_perfect_matching(double_cover(g))
    if isinstance(cover, HallViolator):
        witness: Any = {"hall_violator": sorted(cover.left), "neighborhood": sorted(cover.neighborhood)}
    else:
        witness = _edge_list(cover.edges)
    report.statuses["double_cover_l_pm"] = Status(not isinstance(cover, HallViolator), witness, "augmenting paths")
    report.agreement["fpm_vs_double_cover"] = (fpm is not None) == report.statuses["double_cover_l_pm"].holds

    avoiding = triangle_avoiding_fpm(g)
    report.statuses["ns_pm_characterization"] = Status(
        avoiding is not None, _fpm_witness(avoiding) if avoiding else None, "triangle-avoiding fractional matching"
    )
    game = pm_game(g)
    corr = ns_perfect_correlation(game)
    report.statuses["ns_pm_lp"] = Status(corr is not None, _corr_witness(corr) if corr else None, "feasibility LP")
    report.agreement["ns_characterization_vs_lp"] = (avoiding is not None) == (corr is not None)
    _game_values(report, game, synchronous=True)


def _analyze_bipartite(report: AnalysisReport, g: BipartiteGraph) -> None:
    result = l_perfect_matching(g)
    if isinstance(result, HallViolator):
        report.statuses["l_pm"] = Status(
            False, {"hall_violator": sorted(result.left), "neighborhood": sorted(result.neighborhood)}, "augmenting paths"
        )
    else:
        report.statuses["l_pm"] = Status(True, _edge_list(result.edges), "augmenting paths")

    sharp = sharp_reduction(g)
    report.statuses["ns_bpm_characterization"] = Status(
        not sharp.lonely_left,
        {"forced": _edge_list(sharp.forced), "lonely_left": sorted(sharp.lonely_left)},
        "sharp reduction",
    )
    game = bpm_game(g)
    corr = ns_perfect_correlation(game)
    report.statuses["ns_bpm_lp"] = Status(corr is not None, _corr_witness(corr) if corr else None, "feasibility LP")
    report.agreement["ns_characterization_vs_lp"] = (not sharp.lonely_left) == (corr is not None)
    _game_values(report, game, synchronous=False)


def _analyze_hypergraph(report: AnalysisReport, h: Hypergraph) -> None:
    chosen = hyper_perfect_matching(h)
    report.statuses["classical_pm"] = Status(
        chosen is not None, [list(h.hyperedges[i]) for i in chosen] if chosen is not None else None, "exhaustive search"
    )
    game = hyper_pm_game(h)
    corr = ns_perfect_correlation(game)
    report.statuses["ns_pm_lp"] = Status(corr is not None, _corr_witness(corr) if corr else None, "feasibility LP")
    _game_values(report, game, synchronous=True)
    if report.values["classical"] is not None:
        report.agreement["classical_value_vs_matching"] = (report.values["classical"] == 1) == (chosen is not None)


def analyze(g: AnyGraph, source: str) -> AnalysisReport:
    started = time.perf_counter()
    if isinstance(g, Graph):
        report = AnalysisReport(source, "graph", g.n, g.m)
        _analyze_graph(report, g)
    elif isinstance(g, BipartiteGraph):
        report = AnalysisReport(source, "bipartite", g.n_left + g.n_right, g.m)
        _analyze_bipartite(report, g)
    else:
        report = AnalysisReport(source, "hypergraph", g.n, g.m)
        _analyze_hypergraph(report, g)
    report.elapsed = time.perf_counter() - started
    for name, ok in report.agreement.items():
        if not ok:
            logger.error("%s: %s disagree", source, name)
    return report


def _print_report(report: AnalysisReport) -> None:
    print(f"{report.kind} {report.source}: {report.vertices} vertices, {report.edges} edges")
    rows = [
        (name, "yes" if s.holds else "no", s.method)
        for name, s in report.statuses.items()
    ]
    print_table(["PROPERTY", "STATUS", "METHOD"], rows)
    print()
    print_table(
        ["VALUE", "EXACT"],
        [(name, "skipped" if v is None else short_rational(v)) for name, v in report.values.items()],
    )
    print()
    for name, ok in report.agreement.items():
        print(f"{name}: {'agree' if ok else 'DISAGREE'}")
    print(f"time: {report.elapsed:.3f}s  (matchgames {report.version})")


def command_analyze(path: str, as_json: bool = False, timing: bool = False) -> int:
    try:
        g = load_graph_file(path)
        report = analyze(g, path)
    except OSError as e:
        print(f"Error: cannot read {path}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    if as_json:
        print_json(report.to_dict(timing=timing))
    else:
        _print_report(report)
    if not report.consistent:
        print("Error: characterization and LP disagree", file=sys.stderr)
        return 1
    return EXIT_OK
