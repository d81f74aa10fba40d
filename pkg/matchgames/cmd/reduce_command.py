from __future__ import annotations

import sys

from matchgames.cmd import EXIT_ABSENT, EXIT_OK, fail, print_json
from matchgames.errors import InputError, MatchGamesError
from matchgames.graph import BipartiteGraph, load_graph_file, sharp_reduction


def command_reduce_sharp(path: str, as_json: bool = False) -> int:
    """Exit 1 when the reduction leaves a left vertex with no neighbour."""
    try:
        g = load_graph_file(path)
        if not isinstance(g, BipartiteGraph):
            raise InputError("sharp reduction needs a bipartite graph file")
        sharp = sharp_reduction(g)
    except OSError as e:
        print(f"Error: cannot read {path}: {e.strerror}", file=sys.stderr)
        return 2
    except MatchGamesError as e:
        return fail(e)

    if as_json:
        print_json({
            "forced": [list(e) for e in sharp.forced],
            "remaining_left": sharp.remaining_left,
            "remaining_right": sharp.remaining_right,
            "lonely_left": sharp.lonely_left,
        })
    else:
        for left, right in sharp.forced:
            print(f"forced  L{left} - R{right}")
        for left in sorted(sharp.lonely_left):
            print(f"lonely  L{left}")
        print(f"remaining: {len(sharp.remaining_left)} left, {len(sharp.remaining_right)} right")
    return EXIT_ABSENT if sharp.lonely_left else EXIT_OK
