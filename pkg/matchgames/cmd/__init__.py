from __future__ import annotations

import json
import sys
from fractions import Fraction
from typing import Any

from matchgames.errors import MatchGamesError, SizeLimitError

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def fail(err: MatchGamesError) -> int:
    print(f"Error: {err.error_message}", file=sys.stderr)
    return EXIT_LIMIT if isinstance(err, SizeLimitError) else EXIT_INPUT


def _plain(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (frozenset, set)) else obj
        return [_plain(v) for v in items]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    return obj


def print_json(obj: Any) -> None:
    print(json.dumps(_plain(obj), indent=2, sort_keys=True))
