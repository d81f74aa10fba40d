from __future__ import annotations

import sys
from typing import Optional

from matchgames.cmd import EXIT_ABSENT, EXIT_OK, fail
from matchgames.config import get_settings
from matchgames.errors import InputError, MatchGamesError
from matchgames.graph import Graph, load_graph_file
from matchgames.packing.certificates import (
    dump_certificate,
    load_certificate,
    qpm_equiv_checks,
    verify_qpm_certificate,
)
from matchgames.packing.search import search_qpm


def _load_plain_graph(path: str) -> Graph:
    g = load_graph_file(path)
    if not isinstance(g, Graph):
        raise InputError("quantum perfect matching needs a graph file")
    return g


def command_qpm_verify(graph_path: str, cert_path: str) -> int:
    try:
        g = _load_plain_graph(graph_path)
        fam = load_certificate(g, cert_path)
        report = verify_qpm_certificate(g, fam)
        checks = qpm_equiv_checks(g, fam) if report.passed else None
    except OSError as e:
        print(f"Error: cannot read {e.filename}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    print(f"dimension: {report.dimension}")
    print(f"completeness residual:  {report.completeness_residual:.3g}")
    print(f"orthogonality residual: {report.orthogonality_residual:.3g}")
    for v in report.violations:
        print(f"violation: {v}")
    if checks is None:
        print("certificate: FAILED")
        return EXIT_ABSENT
    print(f"line graph packing value: {checks.value:.12f} (expected {checks.expected_value:g})")
    print(f"certificate: {'passed' if checks.consistent else 'passed, equivalence checks FAILED'}")
    return EXIT_OK if checks.consistent else EXIT_ABSENT


def command_qpm_search(
    graph_path: str,
    d: int,
    iterations: int = 500,
    restarts: int = 4,
    seed: Optional[int] = None,
    output: Optional[str] = None,
) -> int:
    seed = get_settings().seed if seed is None else seed
    try:
        g = _load_plain_graph(graph_path)
        outcome = search_qpm(g, d, iterations=iterations, seed=seed, restarts=restarts)
    except OSError as e:
        print(f"Error: cannot read {graph_path}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    print(f"seed: {outcome.seed}", file=sys.stderr)
    if outcome.family is None:
        print(f"no certificate found in dimension {d} after {outcome.attempts} attempts "
              f"(best residual {outcome.best_residual:.3g}); this is not a proof of absence", file=sys.stderr)
        return EXIT_ABSENT
    text = dump_certificate(g, outcome.family)
    if output:
        with open(output, "w") as f:
            f.write(text)
        print(f"certificate written to {output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK
