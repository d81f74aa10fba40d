from __future__ import annotations

import logging
import sys

from matchgames.cmd import EXIT_ABSENT, EXIT_OK, fail
from matchgames.errors import InputError, MatchGamesError
from matchgames.exact.fractional import explore_half_integral, triangle_avoiding_fpm
from matchgames.graph import Graph, load_graph_file

logger = logging.getLogger("matchgames.cmd.explore_command")


def command_explore_half_integral(path: str) -> int:
    """
    Look for a triangle-avoiding fractional perfect matching with weights in {0, 1/2, 1}
    and compare with the LP. Reports only.
    """
    try:
        g = load_graph_file(path)
        if not isinstance(g, Graph):
            raise InputError("half-integral exploration needs a graph file")
        half = explore_half_integral(g)
        lp = triangle_avoiding_fpm(g)
    except OSError as e:
        print(f"Error: cannot read {path}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    print(f"triangle-avoiding fractional matching (LP): {'yes' if lp else 'no'}")
    print(f"half-integral one: {'yes' if half else 'no'}")
    if lp is not None and half is None:
        logger.warning("%s: LP finds a triangle-avoiding matching but no half-integral one exists", path)
        print("note: no half-integral witness although the LP is feasible")
    if half is None:
        return EXIT_ABSENT
    sys.stdout.write(half.to_text())
    return EXIT_OK
